#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kms/numeric.hpp"

namespace kms {

/// Laurent polynomial in the formal variable v with arbitrary-precision
/// integer coefficients. Stored as v^low * (c_0 + c_1 v + ...), always
/// normalized: no leading or trailing zero coefficients, zero has no terms.
class VPoly {
 public:
  VPoly() = default;
  VPoly(long long c);  // NOLINT: integers promote to constants
  VPoly(BigInt c);     // NOLINT

  static VPoly v() { return monomial(1, 1); }
  static VPoly monomial(BigInt c, std::int64_t power);
  /// Coefficients for v^low, v^{low+1}, ...
  static VPoly from_coeffs(std::vector<BigInt> coeffs, std::int64_t low = 0);

  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t low() const noexcept { return low_; }
  /// Highest power present; meaningless for zero.
  std::int64_t high() const noexcept { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
  BigInt coeff(std::int64_t power) const;
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  VPoly& operator+=(const VPoly& o);
  VPoly& operator-=(const VPoly& o);
  VPoly& operator*=(const VPoly& o);
  VPoly operator-() const;

  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  friend VPoly operator*(const VPoly& a, const VPoly& b);
  friend bool operator==(const VPoly&, const VPoly&) = default;

  /// Exact quotient when `d` divides this polynomial in Z[v, v^-1], else nullopt.
  std::optional<VPoly> divide_exact(const VPoly& d) const;

  Rational evaluate(const Rational& v) const;
  /// Value at v = 1/q.
  Rational at_inverse_q(const Rational& q) const { return evaluate(Rational(1) / q); }

  /// Human-readable, e.g. "1 - v + 2v^3".
  std::string str() const;

 private:
  void normalize();

  std::int64_t low_ = 0;
  std::vector<BigInt> c_;
};

}  // namespace kms
