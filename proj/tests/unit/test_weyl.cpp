#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kms/weyl.hpp"

using namespace kms;

namespace {
CartanMatrix A1() { return CartanMatrix::validate({{2}}); }
CartanMatrix A2() { return CartanMatrix::validate({{2, -1}, {-1, 2}}); }
CartanMatrix AFF() { return CartanMatrix::validate({{2, -2}, {-2, 2}}); }
BaseCoweight cw(std::vector<std::int64_t> n) { return BaseCoweight{std::move(n), ""}; }
}  // namespace

TEST_CASE("generators and normal forms") {
  WeylGroup w(A1());
  auto s = w.apply_generator(w.identity(), 0);
  CHECK(s.length() == 1);
  CHECK(s.normal_form() == CorootVector({1}));
  auto back = w.apply_generator(s, 0);
  CHECK(back.is_identity());
  CHECK(back.normal_form() == CorootVector({0}));

  WeylGroup aff(AFF());
  auto x = aff.from_word({0, 1, 0});
  CHECK(x.length() == 3);
  CHECK_THROWS_AS(aff.from_word({0, 0}), Error);
  CHECK(aff.from_word({0, 0}, false).is_identity());
}

TEST_CASE("braid relation in A2 via normal forms") {
  WeylGroup w(A2());
  CHECK(w.from_word({0, 1, 0}) == w.from_word({1, 0, 1}));
  CHECK_FALSE(w.from_word({0, 1}) == w.from_word({1, 0}));
  auto x = w.from_word({0, 1});
  CHECK(w.multiply(x, w.inverse(x)).is_identity());
}

TEST_CASE("balls") {
  CHECK(WeylGroup(A1()).ball(5).size() == 2);
  CHECK(WeylGroup(A2()).ball(3).size() == 6);
  CHECK(WeylGroup(AFF()).ball(3).size() == 7);
  CHECK(WeylGroup(A2()).finite_elements().size() == 6);
  CHECK_THROWS_AS(WeylGroup(AFF()).finite_elements(), Error);
  auto b = WeylGroup(AFF()).ball(2);
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(b[k - 1].length() <= b[k].length());
}

TEST_CASE("actions on exponents") {
  WeylGroup w(A1());
  auto s = w.from_word({0});
  auto e = w.act_on_exponent(s, Exponent{cw({2}), CorootVector({0})});
  CHECK(e.offset == CorootVector({2}));
  CHECK(w.act_on_exponent(w.identity(), Exponent{cw({2}), CorootVector({1})}).offset == CorootVector({1}));

  // w1 w2 on n = (1,1): w2 lambda = lambda - a2, then w1 gives lambda - a2 - (n1 + 1) a1
  WeylGroup w2(A2());
  auto x = w2.from_word({0, 1});
  CHECK(w2.base_offset(x, {1, 1}) == CorootVector({2, 1}));
  CHECK(w2.act_on_coroot(w2.from_word({0}), CorootVector({0, 1})) == CorootVector({1, 1}));
}

TEST_CASE("inversion coroots") {
  WeylGroup w(A2());
  auto inv = w.inversion_coroots(w.from_word({0, 1, 0}));
  CHECK(inv.size() == 3);
  for (const auto& c : inv) CHECK(c.is_nonnegative());
}

TEST_CASE("stabilizer Poincare polynomials") {
  WeylGroup w(A2());
  const VPoly v = VPoly::v();
  CHECK(w.stabilizer_poincare(cw({1, 1})) == VPoly(1));
  CHECK(w.stabilizer_poincare(cw({1, 0})) == VPoly(1) + v);
  CHECK(w.stabilizer_poincare(cw({0, 0})) == VPoly(1) + VPoly(2) * v + VPoly(2) * v * v + v * v * v);
  CHECK_THROWS_AS(WeylGroup(AFF()).stabilizer_poincare(cw({0, 0})), Error);
}

TEST_CASE("length filter") {
  CHECK(WeylGroup(A1()).omega_filter(cw({2}), CorootVector({0})).size() == 1);
  CHECK(WeylGroup(A1()).omega_filter(cw({2}), CorootVector({1})).size() == 2);
  CHECK(WeylGroup(A2()).omega_filter(cw({1, 1}), CorootVector({1, 1})).size() == 6);
  CHECK_THROWS_AS(WeylGroup(A2()).omega_filter(cw({1, 1}), CorootVector({1, -1})), Error);
}
