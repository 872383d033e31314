#include "kms/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace kms {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "lattice coordinate overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "lattice coordinate overflow");
  return r;
}

}  // namespace checked

std::int64_t LatticeVec::height() const {
  std::int64_t h = 0;
  for (auto x : c_) h = checked::add(h, x);
  return h;
}

bool LatticeVec::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

bool LatticeVec::is_nonnegative() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x >= 0; });
}

bool LatticeVec::is_nonpositive() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x <= 0; });
}

LatticeVec& LatticeVec::operator+=(const LatticeVec& o) {
  if (o.rank() != rank()) throw Error(Errc::IndexOutOfRange, "rank mismatch in lattice addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], o.c_[i]);
  return *this;
}

LatticeVec& LatticeVec::operator-=(const LatticeVec& o) {
  if (o.rank() != rank()) throw Error(Errc::IndexOutOfRange, "rank mismatch in lattice subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], -o.c_[i]);
  return *this;
}

LatticeVec& LatticeVec::add_at(std::size_t i, std::int64_t k) {
  c_.at(i) = checked::add(c_[i], k);
  return *this;
}

LatticeVec LatticeVec::operator-() const {
  LatticeVec r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

LatticeVec operator*(std::int64_t k, const LatticeVec& a) {
  LatticeVec r(a);
  for (auto& x : r.c_) x = checked::mul(k, x);
  return r;
}

std::string LatticeVec::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

}  // namespace kms
