#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kms/spherical.hpp"

using namespace kms;

namespace {
RootDatum A1() { return RootDatum::from_matrix({{2}}); }
RootDatum A2() { return RootDatum::from_matrix({{2, -1}, {-1, 2}}); }
RootDatum AFF() { return RootDatum::from_matrix({{2, -2}, {-2, 2}}); }
BaseCoweight cw(std::vector<std::int64_t> n) { return BaseCoweight{std::move(n), ""}; }
const VPoly v = VPoly::v();
const VPoly one_minus_v = VPoly(1) - v;
}  // namespace

TEST_CASE("Upsilon") {
  auto u = upsilon(A1(), 3);
  CHECK(u.element.size() == 4);
  CHECK(u.element.coefficient(CorootVector({0})) == VPoly(1));
  for (int k = 1; k <= 3; ++k) CHECK(u.element.coefficient(CorootVector({k})) == one_minus_v);
  CHECK(u.omitted_factors.empty());

  CHECK(upsilon(A2(), 0).element.size() == 1);
  auto u2 = upsilon(A2(), 2);
  CHECK(u2.element.coefficient(CorootVector({1, 0})) == one_minus_v);
  CHECK(u2.element.coefficient(CorootVector({2, 0})) == one_minus_v);
  CHECK(u2.element.coefficient(CorootVector({1, 1})) == one_minus_v * (VPoly(2) - v));

  auto ua = upsilon(AFF(), 2);
  CHECK(ua.omitted_factors == std::vector<std::string>{"m-factor"});
  CHECK_THROWS_AS(upsilon(AFF(), roots_up_to_height(AFF().cartan, 1), 2), Error);
}

TEST_CASE("Satake series from Macdonald's formula") {
  auto s = satake_normalized(A1(), cw({2}));
  CHECK(s.exact);
  CHECK(s.depth == 2);
  CHECK(s.element.coefficient(CorootVector({0})) == VPoly(1));
  CHECK(s.element.coefficient(CorootVector({1})) == one_minus_v);
  CHECK(s.element.coefficient(CorootVector({2})) == VPoly(1));
  // S = q e^{a} + (q - 1) + q e^{-a} at q = 2
  CHECK(s.coefficient_at(CorootVector({1}), Rational(2)) * 2 == Rational(1));

  auto m = satake_normalized(A2(), cw({1, 0}));
  CHECK(m.element.size() == 3);

  auto reg = satake_normalized(A2(), cw({1, 1}));
  CHECK(reg.element.coefficient(CorootVector({0, 0})) == VPoly(1));
  CHECK(satake_support_depth(A2(), cw({1, 1})) == 4);

  auto zero = satake_normalized(A2(), cw({0, 0}));
  CHECK(zero.element.size() == 1);
  CHECK(zero.element.coefficient(CorootVector({0, 0})) == VPoly(1));

  CHECK_THROWS_AS(satake_normalized(AFF(), cw({2, 2})), Error);
  auto aff = satake_normalized(AFF(), cw({2, 2}), SatakeOptions{2, std::nullopt});
  CHECK_FALSE(aff.exact);
  CHECK(aff.element.coefficient(CorootVector({0, 0})) == VPoly(1));
  try {
    satake_normalized(AFF(), cw({3, 3}), SatakeOptions{4, 0});
    FAIL("expected BallTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BallTooSmall);
  }
}

TEST_CASE("GK shift") {
  auto g0 = upsilon(A1(), 3);
  CHECK(gk_shift(cw({0}), g0).element == g0.element);
  auto g = gk_shift(cw({4}), g0);
  CHECK(g.element.base().pairings == std::vector<std::int64_t>{4});
  CHECK(g.element.coefficient(CorootVector({2})) == g0.element.coefficient(CorootVector({2})));
  auto gg = gk_shift(cw({2}), gk_shift(cw({4}), g0));
  CHECK(gg.element.base().pairings == std::vector<std::int64_t>{6});
}

TEST_CASE("W-invariance of exact series") {
  WeylGroup w(A2().cartan);
  auto s = satake_normalized(A2(), cw({2, 1}));
  for (const auto& x : w.finite_elements()) CHECK(act_on_series(w, x, s).element == s.element);
}

TEST_CASE("approximation stabilization") {
  auto rep = approximation_check(A1(), {cw({2}), cw({4}), cw({6})}, 2);
  REQUIRE(rep.probes.size() == 3);
  CHECK(rep.stable_from[1] == std::optional<std::size_t>(0));
  CHECK(rep.stable_from[2] == std::optional<std::size_t>(1));
  CHECK(rep.matches_upsilon == std::optional<bool>(true));

  auto flat = approximation_check(A1(), {cw({2}), cw({4})}, 0);
  CHECK(flat.stabilized());
  CHECK(flat.traces[0][0] == VPoly(1));

  auto aff = approximation_check(AFF(), {cw({2, 2}), cw({3, 3}), cw({4, 4})}, 2);
  CHECK(aff.stabilized());
  CHECK_FALSE(aff.matches_upsilon.has_value());

  CHECK_THROWS_AS(approximation_check(A1(), {cw({4}), cw({2})}, 2), Error);
  CHECK_THROWS_AS(approximation_check(A1(), {cw({0}), cw({2})}, 2), Error);
}

TEST_CASE("finite c-function") {
  auto one = [](const CorootVector&) { return Rational(1); };
  CHECK(finite_cfunction(A1(), one, Rational(2)) == Rational(3, 2));
  CHECK(finite_cfunction(A2(), one, Rational(2)) == Rational(27, 8));
  CHECK_THROWS_AS(finite_cfunction(AFF(), one, Rational(2)), Error);
  try {
    finite_cfunction(A1(), [](const CorootVector&) { return Rational(0); }, Rational(2));
    FAIL("expected PoleAtCoroot");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleAtCoroot);
  }
  CHECK_THROWS_AS(finite_cfunction(A1(), [](const CorootVector&) { return Rational(1, 2); }, Rational(2)), Error);
}
