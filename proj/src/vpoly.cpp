#include "kms/vpoly.hpp"

#include <algorithm>
#include <sstream>

namespace kms {

VPoly::VPoly(long long c) : VPoly(BigInt(c)) {}

VPoly::VPoly(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

VPoly VPoly::monomial(BigInt c, std::int64_t power) {
  VPoly p;
  if (c != 0) {
    p.c_.push_back(std::move(c));
    p.low_ = power;
  }
  return p;
}

VPoly VPoly::from_coeffs(std::vector<BigInt> coeffs, std::int64_t low) {
  VPoly p;
  p.c_ = std::move(coeffs);
  p.low_ = low;
  p.normalize();
  return p;
}

void VPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (c_.empty()) low_ = 0;
}

BigInt VPoly::coeff(std::int64_t power) const {
  if (c_.empty() || power < low_ || power > high()) return 0;
  return c_[static_cast<std::size_t>(power - low_)];
}

VPoly& VPoly::operator+=(const VPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::int64_t lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<BigInt> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < c_.size(); ++k) r[static_cast<std::size_t>(low_ - lo) + k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  c_ = std::move(r);
  low_ = lo;
  normalize();
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) { return *this += -o; }

VPoly VPoly::operator-() const {
  VPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  VPoly r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.normalize();
  return r;
}

VPoly& VPoly::operator*=(const VPoly& o) { return *this = *this * o; }

std::optional<VPoly> VPoly::divide_exact(const VPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return VPoly{};
  // long division from the lowest power up; exact iff the remainder vanishes
  std::vector<BigInt> rem = c_;
  const auto& dc = d.c_;
  if (rem.size() < dc.size()) return std::nullopt;
  std::vector<BigInt> quot(rem.size() - dc.size() + 1);
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (rem[k] == 0) continue;
    if (rem[k] % dc[0] != 0) return std::nullopt;
    quot[k] = rem[k] / dc[0];
    for (std::size_t j = 0; j < dc.size(); ++j) rem[k + j] -= quot[k] * dc[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; })) return std::nullopt;
  return from_coeffs(std::move(quot), low_ - d.low_);
}

Rational VPoly::evaluate(const Rational& v) const {
  if (is_zero()) return 0;
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rational(*it);
  return acc * rational_pow(v, low_);
}

std::string VPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigInt& c = c_[k];
    if (c == 0) continue;
    std::int64_t p = low_ + static_cast<std::int64_t>(k);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (p == 0 || mag != 1) os << mag;
    if (p != 0) {
      os << 'v';
      if (p != 1) os << '^' << p;
    }
    first = false;
  }
  return os.str();
}

}  // namespace kms
