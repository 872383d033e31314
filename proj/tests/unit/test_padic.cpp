#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kms/padic.hpp"

using namespace kms;
using namespace kms::padic;

namespace {
const Window W2{2, 4, 6};
const Window W3{3, 4, 6};
TruncatedLaurent t(const Window& w, int e, int c = 1) { return TruncatedLaurent::monomial(w, c, e); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}
}  // namespace

TEST_CASE("truncated Laurent arithmetic") {
  auto x = t(W3, 0) + t(W3, 1);  // 1 + t
  auto y = x.inverse();           // 1 - t + t^2 - ...
  CHECK(y.coeff(0) == 1);
  CHECK(y.coeff(1) == 2);
  CHECK(y.coeff(2) == 1);
  CHECK((x * y - t(W3, 0)).is_zero());

  auto z = t(W2, -2).inverse();
  CHECK(z.valuation() == std::optional<int>(2));
  CHECK(t(W2, 1).shifted(-3).valuation() == std::optional<int>(-2));
  CHECK((t(W2, 0) + t(W2, 0)).is_zero());  // characteristic 2

  auto lossy = t(W2, -2) * t(W2, 0);
  CHECK(lossy.precision() == 4);
  CHECK_FALSE(t(W2, -1).is_integral());
  CHECK(t(W2, 3).is_integral());
}

TEST_CASE("window and field errors") {
  CHECK(code_of([] { TruncatedLaurent(Window{5, 2, 4}); }) == Errc::UnsupportedResidueField);
  CHECK(code_of([] { (void)(t(W2, -3) * t(W2, -3)); }) == Errc::WindowUnderflow);
  CHECK(code_of([] { (void)TruncatedLaurent(W2).inverse(); }) == Errc::InsufficientPrecision);
  CHECK(code_of([] { spherical_census(1, 5, 5); }) == Errc::UnsupportedResidueField);
  CHECK(code_of([] { spherical_census(2, 4, 2); }) == Errc::PrecisionTooLow);
}

TEST_CASE("Iwasawa class") {
  CHECK(iwasawa_class(LaurentMatrix::identity(W2)) == 0);
  CHECK(iwasawa_class(LaurentMatrix::torus(W2, 1)) == 1);
  CHECK(iwasawa_class(LaurentMatrix::lower(t(W2, -2))) == -2);
  const LaurentMatrix g = LaurentMatrix::lower(t(W3, -2, 2)) * LaurentMatrix::upper(t(W3, -1));
  const auto dec = iwasawa_decompose(g);
  CHECK(dec.m == -2);
  CHECK(dec.k.in_K());
  CHECK((dec.k * LaurentMatrix::torus(W3, dec.m) * LaurentMatrix::upper(dec.x)).equals(g));
}

TEST_CASE("valuation rule certified by decomposition search") {
  CHECK(validate_iwasawa_rule(2, 300, 11) == 300);
  CHECK(validate_iwasawa_rule(3, 300, 12) == 300);
}

TEST_CASE("spherical census") {
  auto c0 = spherical_census(0, 3, 2);
  CHECK(c0.total == 1);
  CHECK(c0.census == std::map<int, std::int64_t>{{0, 1}});

  auto c = spherical_census(1, 4, 2);
  CHECK(c.total == 6);
  CHECK(c.census == std::map<int, std::int64_t>{{-1, 4}, {0, 1}, {1, 1}});
  CHECK(c.dominance_ok);

  auto c3 = spherical_census(1, 4, 3);
  CHECK(c3.total == 12);
  CHECK(c3.census == std::map<int, std::int64_t>{{-1, 9}, {0, 2}, {1, 1}});

  auto d = spherical_census(2, 5, 3);
  CHECK(d.total == 108);
  CHECK(d.census == std::map<int, std::int64_t>{{-2, 81}, {-1, 18}, {0, 6}, {1, 2}, {2, 1}});
}

TEST_CASE("census is precision independent") {
  for (int q : {2, 3})
    for (int lam : {1, 2}) {
      const auto a = spherical_census(lam, 2 * lam + 1, q);
      const auto b = spherical_census(lam, 2 * lam + 2, q);
      CHECK(a.census == b.census);
    }
  CHECK(gk_census(3, 2, 2).census == gk_census(3, 3, 2).census);
}

TEST_CASE("GK census") {
  auto g = gk_census(4, 3, 2);
  CHECK(g.census.at(-1) == 1);
  CHECK(g.census.at(-2) == 2);
  for (int q : {2, 3}) {
    auto c = gk_census(4, 3, q);
    CHECK(c.census.at(0) == 1);
    std::int64_t qk = 1;
    for (int k = 1; k <= 4; ++k) {
      CHECK(c.census.at(-k) == qk * q - qk);
      qk *= q;
    }
  }
}

TEST_CASE("Iwahori refinement") {
  auto c = iwahori_census(1, 4, 2);
  CHECK(c.sums_match);
  CHECK(c.length_bound_ok);
  CHECK(c.pieces.at("1").census == std::map<int, std::int64_t>{{1, 1}});
  CHECK(c.pieces.at("s").total == 5);
  CHECK(c.pieces.at("1").total + c.pieces.at("s").total == 6);

  auto z = iwahori_census(0, 2, 3);
  CHECK(z.pieces.at("1").census == std::map<int, std::int64_t>{{0, 1}});
  CHECK(z.pieces.at("s").total == 0);

  auto big = iwahori_census(2, 5, 3);
  CHECK(big.sums_match);
  CHECK(big.length_bound_ok);
}
