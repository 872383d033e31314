#include "kms/algebra.hpp"

namespace kms {

AlgebraElement AlgebraElement::monomial(BaseCoweight base, CorootVector offset, VPoly c) {
  AlgebraElement e(std::move(base));
  e.add_term(offset, c);
  return e;
}

VPoly AlgebraElement::coefficient(const CorootVector& offset) const {
  auto it = terms_.find(offset);
  return it == terms_.end() ? VPoly{} : it->second;
}

void AlgebraElement::add_term(const CorootVector& offset, const VPoly& c) {
  if (offset.rank() != rank()) throw Error(Errc::MismatchedBase, "offset rank does not match base");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(offset, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_base(const AlgebraElement& o) const {
  if (!(o.base_ == base_)) throw Error(Errc::MismatchedBase, "algebra elements over different bases");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_base(o);
  for (const auto& [off, c] : o.terms_) add_term(off, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_base(o);
  for (const auto& [off, c] : o.terms_) add_term(off, -c);
  return *this;
}

AlgebraElement operator*(const VPoly& c, const AlgebraElement& a) {
  AlgebraElement r(a.base_);
  if (c.is_zero()) return r;
  for (const auto& [off, x] : a.terms_) r.terms_.emplace(off, c * x);
  return r;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, std::optional<std::int64_t> max_depth) {
  AlgebraElement r(a.base_ + b.base_);
  for (const auto& [oa, ca] : a.terms_) {
    auto ha = oa.height();
    for (const auto& [ob, cb] : b.terms_) {
      if (max_depth && ha + ob.height() > *max_depth) continue;
      r.add_term(oa + ob, ca * cb);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::truncated(std::int64_t depth) const {
  AlgebraElement r(base_);
  for (const auto& [off, c] : terms_)
    if (off.is_nonnegative() && off.height() <= depth) r.terms_.emplace(off, c);
  return r;
}

AlgebraElement AlgebraElement::rebased(BaseCoweight base) const {
  if (base.rank() != rank()) throw Error(Errc::MismatchedBase, "rebasing onto a coweight of different rank");
  AlgebraElement r(std::move(base));
  r.terms_ = terms_;
  return r;
}

bool AlgebraElement::support_below_base() const {
  for (const auto& [off, c] : terms_)
    if (!off.is_nonnegative()) return false;
  return true;
}

std::map<CorootVector, Rational> AlgebraElement::evaluate_at(const Rational& q) const {
  if (q <= 1) throw Error(Errc::InvalidParameter, "evaluation requires q > 1");
  std::map<CorootVector, Rational> out;
  for (const auto& [off, c] : terms_) {
    auto val = c.at_inverse_q(q);
    if (val != 0) out.emplace(off, val);
  }
  return out;
}

}  // namespace kms
