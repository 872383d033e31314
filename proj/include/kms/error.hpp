#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kms {

enum class Errc {
  // root_datum
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  NotSquare,
  HeightBoundTooSmall,
  NotSymmetrizable,
  // weyl / lattice
  MismatchedBase,
  InfiniteStabilizer,
  OffsetNotDominatedBy,
  IndexOutOfRange,
  Overflow,
  // dl_algebra
  NonReducedWord,
  NotDominantRegular,
  // spherical_gk
  TableTooShallow,
  BallTooSmall,
  NotFiniteType,
  PoleAtCoroot,
  NonIntegralExponent,
  InvalidChain,
  // padic_oracle
  InsufficientPrecision,
  PrecisionTooLow,
  WindowUnderflow,
  UnsupportedResidueField,
  // cli / shared
  ParseError,
  InvalidParameter,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this type; `code()` carries the
/// machine-readable reason that the CLI and the Python module surface.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kms
