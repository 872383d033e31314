#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "kms/dl_algebra.hpp"

using namespace kms;

namespace {
CartanMatrix A1() { return CartanMatrix::validate({{2}}); }
CartanMatrix A2() { return CartanMatrix::validate({{2, -1}, {-1, 2}}); }
CartanMatrix AFF() { return CartanMatrix::validate({{2, -2}, {-2, 2}}); }
BaseCoweight cw(std::vector<std::int64_t> n) { return BaseCoweight{std::move(n), ""}; }
AlgebraElement mono(std::vector<std::int64_t> n) {
  const auto r = n.size();
  return AlgebraElement::monomial(cw(std::move(n)), CorootVector(r));
}
const VPoly v = VPoly::v();
}  // namespace

TEST_CASE("VPoly arithmetic") {
  CHECK((VPoly(1) - v).str() == "1 - v");
  CHECK((v * v - VPoly(1)).divide_exact(v - VPoly(1)) == v + VPoly(1));
  CHECK_FALSE((v * v + VPoly(1)).divide_exact(v - VPoly(1)).has_value());
  CHECK((VPoly(1) - v).at_inverse_q(Rational(2)) == Rational(1, 2));
  CHECK(VPoly::monomial(1, -2).evaluate(Rational(2)) == Rational(1, 4));
}

TEST_CASE("b and c series") {
  auto b = bc_series(SeriesKind::B, 0, 1, 2);
  CHECK(b.coefficient(CorootVector({0})).is_zero());
  CHECK(b.coefficient(CorootVector({1})) == VPoly(1) - v);
  CHECK(b.coefficient(CorootVector({2})) == VPoly(1) - v);
  auto c0 = bc_series(SeriesKind::C, 0, 1, 0);
  CHECK(c0.size() == 1);
  CHECK(c0.coefficient(CorootVector({0})) == v);
  for (std::int64_t d : {0, 1, 3, 6}) {
    auto sum = bc_series(SeriesKind::B, 0, 1, d) + bc_series(SeriesKind::C, 0, 1, d);
    CHECK(sum == v * AlgebraElement::monomial(BaseCoweight::zero(1), CorootVector({0})));
  }
}

TEST_CASE("monomial rule") {
  DemazureLusztig dl(A1());
  auto r = dl.apply_T_i(0, mono({2}));
  AlgebraElement want(cw({2}));
  want.add_term(CorootVector({1}), VPoly(1) - v);
  want.add_term(CorootVector({2}), VPoly(1));
  CHECK(r == want);

  CHECK(dl.apply_T_i(0, mono({0})) == v * mono({0}));
  // n = 1: e^{w mu}
  CHECK(dl.apply_T_i(0, mono({1})) == AlgebraElement::monomial(cw({1}), CorootVector({1})));
  // n = -1 from a shifted exponent: v e^{mu + a} + (v - 1) e^{mu}
  auto neg = dl.apply_T_i(0, AlgebraElement::monomial(cw({1}), CorootVector({1})));
  AlgebraElement want_neg(cw({1}));
  want_neg.add_term(CorootVector({0}), v);
  want_neg.add_term(CorootVector({1}), v - VPoly(1));
  CHECK(neg == want_neg);
}

TEST_CASE("T_w along words") {
  DemazureLusztig dl(A2());
  CHECK(dl.apply_T_w({}, mono({1, 1})) == mono({1, 1}));
  CHECK(dl.apply_T_w({0, 1, 0}, mono({1, 1})) == dl.apply_T_w({1, 0, 1}, mono({1, 1})));
  CHECK_THROWS_AS(dl.apply_T_w({0, 0}, mono({1, 1})), Error);
  try {
    dl.apply_T_w({1, 1}, mono({1, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonReducedWord);
  }
  DemazureLusztig d1(A1());
  CHECK(d1.apply_T_w({0}, mono({1})) == AlgebraElement::monomial(cw({1}), CorootVector({1})));
}

TEST_CASE("Hecke quadratic relation on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  for (const auto& gcm : {A1(), A2(), AFF()}) {
    DemazureLusztig dl(gcm);
    const auto r = gcm.rank();
    for (int n = 0; n < 50; ++n) {
      std::vector<std::int64_t> base(r);
      for (auto& x : base) x = small(rng);
      AlgebraElement f(cw(base));
      for (int t = 0; t < 5; ++t) {
        std::vector<std::int64_t> off(r);
        for (auto& x : off) x = small(rng);
        f.add_term(CorootVector(off), VPoly::from_coeffs({small(rng), small(rng)}, small(rng)));
      }
      for (std::size_t i = 0; i < r; ++i) CHECK(dl.hecke_quadratic_check(i, f));
    }
  }
  DemazureLusztig dl(A1());
  CHECK(dl.hecke_quadratic_check(0, mono({0})));
}

TEST_CASE("integral I_{w,lambda}") {
  DemazureLusztig dl(A1());
  CHECK(dl.integral_I(dl.weyl().identity(), cw({2})) == mono({2}));
  auto I = dl.integral_I(dl.weyl().from_word({0}), cw({2}));
  auto at2 = I.evaluate_at(Rational(2));
  CHECK(at2.size() == 2);
  CHECK(at2.at(CorootVector({1})) == Rational(1, 2));
  CHECK(at2.at(CorootVector({2})) == Rational(1));
  CHECK_THROWS_AS(dl.integral_I(dl.weyl().identity(), cw({0})), Error);

  DemazureLusztig d2(A2());
  const auto w0 = d2.weyl().from_word({0, 1, 0});
  auto J = d2.integral_I(w0, cw({1, 1}));
  CHECK(J.support_below_base());
  const auto top = d2.weyl().base_offset(w0, {1, 1});
  for (const auto& [off, c] : J.terms()) CHECK((top - off).is_nonnegative());
}

TEST_CASE("evaluation") {
  auto e = AlgebraElement::monomial(BaseCoweight::zero(1), CorootVector({1}), VPoly(1) - v);
  CHECK(e.evaluate_at(Rational(2)).at(CorootVector({1})) == Rational(1, 2));
  auto f = AlgebraElement::monomial(BaseCoweight::zero(1), CorootVector({0}), v);
  CHECK(f.evaluate_at(Rational(3)).at(CorootVector({0})) == Rational(1, 3));
  CHECK_THROWS_AS(f.evaluate_at(Rational(1)), Error);
  CHECK_THROWS_AS(mono({1}) + mono({2}), Error);
}
