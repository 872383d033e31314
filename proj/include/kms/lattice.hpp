#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kms/error.hpp"

namespace kms {

/// Integer vector over a basis of simple roots or simple coroots.
///
/// Used for Q, Q^vee, exponent offsets and root-table keys. Arithmetic is
/// overflow-checked; ordering is lexicographic so that maps keyed by
/// LatticeVec iterate in a canonical order.
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(std::size_t rank) : c_(rank, 0) {}
  LatticeVec(std::initializer_list<std::int64_t> init) : c_(init) {}
  explicit LatticeVec(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}

  static LatticeVec unit(std::size_t rank, std::size_t i) {
    LatticeVec v(rank);
    v.c_.at(i) = 1;
    return v;
  }

  std::size_t rank() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coeffs() const noexcept { return c_; }
  const std::vector<std::int64_t>& vec() const noexcept { return c_; }

  /// Sum of coefficients. For a coroot vector this is also <rho, beta^vee>.
  std::int64_t height() const;
  bool is_zero() const noexcept;
  /// All coefficients >= 0, i.e. membership in Q_+ (resp. Q^vee_+).
  bool is_nonnegative() const noexcept;
  /// All coefficients <= 0.
  bool is_nonpositive() const noexcept;

  LatticeVec& operator+=(const LatticeVec& o);
  LatticeVec& operator-=(const LatticeVec& o);
  /// this += k * unit(i)
  LatticeVec& add_at(std::size_t i, std::int64_t k);
  LatticeVec operator-() const;

  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(std::int64_t k, const LatticeVec& a);

  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
  friend auto operator<=>(const LatticeVec& a, const LatticeVec& b) { return a.c_ <=> b.c_; }

  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

using RootVector = LatticeVec;
using CorootVector = LatticeVec;

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace kms
