#include "kms/coweight.hpp"

#include <algorithm>

namespace kms {

bool BaseCoweight::dominant() const noexcept {
  return std::all_of(pairings.begin(), pairings.end(), [](auto n) { return n >= 0; });
}

bool BaseCoweight::regular() const noexcept {
  return std::all_of(pairings.begin(), pairings.end(), [](auto n) { return n != 0; });
}

bool BaseCoweight::is_zero() const noexcept {
  return std::all_of(pairings.begin(), pairings.end(), [](auto n) { return n == 0; });
}

BaseCoweight operator+(const BaseCoweight& a, const BaseCoweight& b) {
  if (a.rank() != b.rank()) throw Error(Errc::MismatchedBase, "coweights of different rank");
  BaseCoweight r;
  r.pairings.resize(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r.pairings[i] = checked::add(a.pairings[i], b.pairings[i]);
  if (a.is_zero())
    r.name = b.name;
  else if (b.is_zero())
    r.name = a.name;
  else
    r.name = a.name + "+" + b.name;
  return r;
}

std::optional<std::int64_t> Exponent::depth() const {
  if (!offset.is_nonnegative()) return std::nullopt;
  return offset.height();
}

}  // namespace kms
