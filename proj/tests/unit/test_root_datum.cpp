#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "kms/root_datum.hpp"

using namespace kms;

namespace {

Errc code_of(const std::vector<std::vector<std::int64_t>>& rows) {
  try {
    CartanMatrix::validate(rows);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected validation to fail");
  return Errc::ParseError;
}

const std::vector<std::vector<std::int64_t>> A2{{2, -1}, {-1, 2}};
const std::vector<std::vector<std::int64_t>> AFF{{2, -2}, {-2, 2}};

}  // namespace

TEST_CASE("GCM validation") {
  CHECK(CartanMatrix::validate(A2).rank() == 2);
  CHECK(CartanMatrix::validate({{2}}).rank() == 1);
  CHECK(code_of({{2, -1}, {0, 2}}) == Errc::AsymmetricZero);
  CHECK(code_of({{2, 1}, {1, 2}}) == Errc::PositiveOffDiagonal);
  CHECK(code_of({{1, -1}, {-1, 2}}) == Errc::DiagonalNotTwo);
  CHECK(code_of({{2, -1}, {-1}}) == Errc::NotSquare);
}

TEST_CASE("classification by principal minors") {
  auto fin = classify(CartanMatrix::validate(A2));
  REQUIRE(fin.blocks.size() == 1);
  CHECK(fin.blocks[0].kind == Kind::Finite);
  CHECK(fin.blocks[0].determinant == 3);

  auto aff = classify(CartanMatrix::validate(AFF));
  CHECK(aff.blocks[0].kind == Kind::Affine);
  CHECK(aff.blocks[0].determinant == 0);

  auto ind = classify(CartanMatrix::validate({{2, -3}, {-3, 2}}));
  CHECK(ind.blocks[0].kind == Kind::Indefinite);
  CHECK(ind.blocks[0].determinant == -5);

  // A1 x A1 splits into two finite blocks
  auto split = classify(CartanMatrix::validate({{2, 0}, {0, 2}}));
  CHECK(split.blocks.size() == 2);
  CHECK(split.finite());

  // affine A2
  auto a2aff = classify(CartanMatrix::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(a2aff.all(Kind::Affine));
}

TEST_CASE("symmetrizer") {
  auto d = symmetrizer(CartanMatrix::validate({{2, -1}, {-3, 2}}));
  REQUIRE(d.has_value());
  // eps_i a_ij symmetric
  CHECK((*d)[0] * -1 == (*d)[1] * -3);
}

TEST_CASE("finite roots have multiplicity one") {
  auto roots = positive_roots(CartanMatrix::validate(A2), 2);
  REQUIRE(roots.size() == 3);
  for (const auto& r : roots) {
    CHECK(r.mult == 1);
    CHECK(r.real);
  }
  CHECK(roots[2].root == RootVector({1, 1}));

  auto g2 = positive_roots(CartanMatrix::validate({{2, -1}, {-3, 2}}), 10);
  CHECK(g2.size() == 6);
  CHECK(finite_positive_roots(CartanMatrix::validate({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})).size() == 6);
}

TEST_CASE("affine A1 root table") {
  auto t = roots_up_to_height(CartanMatrix::validate(AFF), 4);
  CHECK(t.root_mult(RootVector({1, 1})) == 1);
  CHECK(t.root_mult(RootVector({2, 2})) == 1);
  CHECK(t.root_mult(RootVector({2, 1})) == 1);
  CHECK(t.root_mult(RootVector({1, 2})) == 1);
  CHECK(t.root_mult(RootVector({3, 1})) == 0);
  std::size_t imaginary = 0;
  for (const auto& r : t.roots) imaginary += r.real ? 0 : 1;
  CHECK(imaginary == 2);
  CHECK_THROWS_AS(t.root_mult(RootVector({3, 2})), Error);
}

TEST_CASE("hyperbolic multiplicities from the recursion") {
  // below degree 4 in each generator the Serre ideal is empty, so these are
  // dimensions of the free Lie algebra on two generators (Witt's formula)
  auto m = peterson_multiplicities(CartanMatrix::validate({{2, -3}, {-3, 2}}), 6);
  CHECK(m.at(LatticeVec({1, 1})) == 1);
  CHECK(m.at(LatticeVec({1, 2})) == 1);
  CHECK(m.at(LatticeVec({1, 3})) == 1);
  CHECK(m.at(LatticeVec({2, 2})) == 1);
  CHECK(m.at(LatticeVec({2, 3})) == 2);
  CHECK(m.at(LatticeVec({3, 3})) == 3);
  const auto it = m.find(LatticeVec({1, 4}));
  CHECK((it == m.end() || it->second == 0));
}

TEST_CASE("dominance order") {
  const BaseCoweight lam{{2, 1}, "l"};
  CHECK(dominance_leq(Exponent{lam, CorootVector({1, 0})}, Exponent{lam, CorootVector({0, 0})}));
  CHECK(dominance_leq(Exponent{lam, CorootVector({0, 0})}, Exponent{lam, CorootVector({0, 0})}));
  CHECK_FALSE(dominance_leq(Exponent{lam, CorootVector({1, -1})}, Exponent{lam, CorootVector({0, 0})}));
  CHECK_THROWS_AS(dominance_leq(Exponent{lam, CorootVector({0, 0})}, Exponent{BaseCoweight{{0, 0}, "z"}, CorootVector({0, 0})}),
                  Error);
}

TEST_CASE("default labels") {
  auto d = RootDatum::from_matrix(A2);
  CHECK(d.labels == std::vector<std::string>{"a0", "a1"});
}
