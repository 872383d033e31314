#include "kms/error.hpp"

namespace kms {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZero: return "AsymmetricZero";
    case Errc::NotSquare: return "NotSquare";
    case Errc::HeightBoundTooSmall: return "HeightBoundTooSmall";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::MismatchedBase: return "MismatchedBase";
    case Errc::InfiniteStabilizer: return "InfiniteStabilizer";
    case Errc::OffsetNotDominatedBy: return "OffsetNotDominatedBy";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::Overflow: return "Overflow";
    case Errc::NonReducedWord: return "NonReducedWord";
    case Errc::NotDominantRegular: return "NotDominantRegular";
    case Errc::TableTooShallow: return "TableTooShallow";
    case Errc::BallTooSmall: return "BallTooSmall";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::PoleAtCoroot: return "PoleAtCoroot";
    case Errc::NonIntegralExponent: return "NonIntegralExponent";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::PrecisionTooLow: return "PrecisionTooLow";
    case Errc::WindowUnderflow: return "WindowUnderflow";
    case Errc::UnsupportedResidueField: return "UnsupportedResidueField";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

}  // namespace kms
