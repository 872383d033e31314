#pragma once

#include <map>
#include <optional>

#include "kms/coweight.hpp"
#include "kms/lattice.hpp"
#include "kms/numeric.hpp"
#include "kms/vpoly.hpp"

namespace kms {

/// Finite sum  sum_beta c_beta(v) e^{lambda^vee - beta}  over a fixed base
/// coweight lambda^vee. Terms are keyed by the offset beta; zero coefficients
/// are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<CorootVector, VPoly>;

  AlgebraElement() = default;
  explicit AlgebraElement(BaseCoweight base) : base_(std::move(base)) {}

  /// c * e^{lambda^vee - offset}
  static AlgebraElement monomial(BaseCoweight base, CorootVector offset, VPoly c = VPoly(1));

  const BaseCoweight& base() const noexcept { return base_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t rank() const noexcept { return base_.rank(); }

  VPoly coefficient(const CorootVector& offset) const;
  void add_term(const CorootVector& offset, const VPoly& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const VPoly& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.base_ == b.base_ && a.terms_ == b.terms_;
  }

  /// Product in the group algebra; bases add and offsets add. When `max_depth`
  /// is given, terms with offset height above it are dropped.
  friend AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                                 std::optional<std::int64_t> max_depth);

  /// Keeps the terms whose offset lies in Q^vee_+ with height <= depth.
  AlgebraElement truncated(std::int64_t depth) const;

  /// Same terms over a new base (pure relabelling of exponents).
  AlgebraElement rebased(BaseCoweight base) const;

  /// Every offset lies in Q^vee_+ (support below the base in dominance order).
  bool support_below_base() const;

  /// Substitutes v = 1/q.
  std::map<CorootVector, Rational> evaluate_at(const Rational& q) const;

 private:
  void check_base(const AlgebraElement& o) const;

  BaseCoweight base_;
  Terms terms_;
};

}  // namespace kms
