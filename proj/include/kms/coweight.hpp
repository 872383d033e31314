#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kms/lattice.hpp"

namespace kms {

/// A coweight lambda^vee known only through its pairings n_i = <alpha_i, lambda^vee>.
///
/// Nothing here needs realization coordinates: Weyl actions, depth and the
/// rho-pairing of offsets depend on the pairing vector alone.
struct BaseCoweight {
  std::vector<std::int64_t> pairings;
  std::string name;

  static BaseCoweight zero(std::size_t rank) { return {std::vector<std::int64_t>(rank, 0), "0"}; }

  std::size_t rank() const noexcept { return pairings.size(); }
  bool dominant() const noexcept;
  bool regular() const noexcept;
  bool is_zero() const noexcept;

  friend BaseCoweight operator+(const BaseCoweight& a, const BaseCoweight& b);
  friend bool operator==(const BaseCoweight& a, const BaseCoweight& b) { return a.pairings == b.pairings; }
};

/// The exponent lambda^vee - offset, offset in the coroot lattice.
struct Exponent {
  BaseCoweight base;
  CorootVector offset;

  /// height(offset) when offset lies in Q^vee_+, otherwise nullopt.
  std::optional<std::int64_t> depth() const;
};

}  // namespace kms
