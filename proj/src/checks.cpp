#include "kms/checks.hpp"

#include <chrono>

#include "kms/dl_algebra.hpp"

namespace kms::checks {

namespace {

using io::Json;
using Clock = std::chrono::steady_clock;

RootDatum a1() { return RootDatum::from_matrix({{2}}, {}); }
RootDatum a2() { return RootDatum::from_matrix({{2, -1}, {-1, 2}}, {}); }
RootDatum affine_a1() { return RootDatum::from_matrix({{2, -2}, {-2, 2}}, {}); }

BaseCoweight cw(std::vector<std::int64_t> n) { return BaseCoweight{std::move(n), ""}; }

CheckResult finish(int id, std::string name, bool passed, Json detail, Clock::time_point start) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.passed = passed;
  r.detail = std::move(detail);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

AlgebraElement random_element(const BaseCoweight& base, std::mt19937_64& rng) {
  AlgebraElement e(base);
  const auto terms = uniform(rng, 1, 4);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::vector<std::int64_t> off(base.rank());
    for (auto& x : off) x = uniform(rng, -3, 3);
    std::vector<BigInt> cs(static_cast<std::size_t>(uniform(rng, 1, 3)));
    for (auto& c : cs) c = uniform(rng, -3, 3);
    e.add_term(CorootVector(off), VPoly::from_coeffs(cs, uniform(rng, -2, 2)));
  }
  return e;
}

std::vector<std::vector<std::size_t>> reduced_words(const WeylGroup& weyl, const WeylElement& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < weyl.rank(); ++i) {
    if (weyl.has_left_ascent(w, i)) continue;
    for (auto& tail : reduced_words(weyl, weyl.apply_generator(w, i))) {
      tail.insert(tail.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

AlgebraElement alternating_rho_sum(const CartanMatrix& gcm, std::int64_t depth) {
  // roots of gcm are the coroots of its transpose
  const WeylGroup weyl(gcm.transpose());
  const std::vector<std::int64_t> rho(gcm.rank(), 1);
  AlgebraElement out(BaseCoweight::zero(gcm.rank()));
  // height(rho - w rho) >= l(w)
  for (const auto& w : weyl.ball(static_cast<std::size_t>(std::max<std::int64_t>(depth, 0)))) {
    const auto off = weyl.base_offset(w, rho);
    if (off.height() > depth) continue;
    out.add_term(off, VPoly(w.length() % 2 == 0 ? 1 : -1));
  }
  return out;
}

AlgebraElement denominator_product(const RootTable& table, std::size_t rank, std::int64_t depth) {
  const BaseCoweight zero = BaseCoweight::zero(rank);
  AlgebraElement out = AlgebraElement::monomial(zero, CorootVector(rank));
  for (const auto& r : table.roots) {
    if (r.root.height() > depth) continue;
    AlgebraElement factor = AlgebraElement::monomial(zero, CorootVector(rank));
    factor.add_term(r.root, VPoly(-1));
    for (std::int64_t k = 0; k < r.mult; ++k) out = multiply(out, factor, depth);
  }
  return out;
}

CheckResult hecke_quadratic(const SuiteOptions& opts) {
  const auto start = Clock::now();
  std::mt19937_64 rng(opts.seed);
  Json detail = Json::array();
  bool ok = true;
  for (const auto& [name, datum] : {std::pair{"A1", a1()}, std::pair{"A2", a2()}, std::pair{"affine A1", affine_a1()}}) {
    const DemazureLusztig dl(datum.cartan);
    std::size_t failures = 0;
    for (std::size_t n = 0; n < opts.hecke_samples; ++n) {
      std::vector<std::int64_t> base(datum.rank());
      for (auto& x : base) x = uniform(rng, -3, 3);
      const auto f = random_element(cw(base), rng);
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(datum.rank()) - 1));
      if (!dl.hecke_quadratic_check(i, f)) ++failures;
    }
    ok = ok && failures == 0;
    detail.push_back(Json{{"datum", name}, {"samples", opts.hecke_samples}, {"failures", failures}});
  }
  return finish(1, "Hecke quadratic relation", ok, detail, start);
}

CheckResult word_independence(const SuiteOptions&) {
  const auto start = Clock::now();
  Json detail = Json::array();
  bool ok = true;
  for (const auto& [name, datum] : {std::pair{"A2", a2()}, std::pair{"affine A1", affine_a1()}}) {
    const DemazureLusztig dl(datum.cartan);
    std::size_t elements = 0, words = 0;
    Json mismatches = Json::array();
    for (const auto& base : {cw({2, 3}), cw({-1, 2})}) {
      const auto e = AlgebraElement::monomial(base, CorootVector(2));
      for (const auto& w : dl.weyl().ball(5)) {
        ++elements;
        const auto ws = reduced_words(dl.weyl(), w);
        words += ws.size();
        const auto ref = dl.apply_T_w(w.word(), e);
        for (const auto& word : ws) {
          if (!(dl.weyl().from_word(word) == w) || !(dl.apply_T_w(word, e) == ref)) {
            mismatches.push_back(Json{{"base", base.pairings}, {"word", word}});
          }
        }
      }
    }
    ok = ok && mismatches.empty();
    detail.push_back(Json{{"datum", name}, {"elements", elements}, {"reduced_words", words}, {"mismatches", mismatches}});
  }
  return finish(2, "Word independence", ok, detail, start);
}

CheckResult rank_one_closed_form(const SuiteOptions&) {
  const auto start = Clock::now();
  const DemazureLusztig dl(a1().cartan);
  const auto lam = cw({2});
  const auto got = dl.apply_T_w({0}, AlgebraElement::monomial(lam, CorootVector(1)));
  AlgebraElement want(lam);
  want.add_term(CorootVector({1}), VPoly(1) - VPoly::v());
  want.add_term(CorootVector({2}), VPoly(1));
  const bool ok = got == want;
  return finish(3, "Rank-1 closed form", ok, Json{{"got", io::to_json(got)}, {"expected", io::to_json(want)}}, start);
}

CheckResult finite_support(const SuiteOptions&) {
  const auto start = Clock::now();
  Json detail = Json::array();
  bool ok = true;
  const std::vector<std::vector<std::int64_t>> rank1{{1}, {2}, {3}, {4}, {5}};
  const std::vector<std::vector<std::int64_t>> rank2{{1, 1}, {2, 1}, {1, 2}, {2, 3}, {3, 3}};
  for (const auto& [name, datum] : {std::pair{"A1", a1()}, std::pair{"A2", a2()}, std::pair{"affine A1", affine_a1()}}) {
    const DemazureLusztig dl(datum.cartan);
    std::size_t evaluated = 0;
    Json bad = Json::array();
    for (const auto& n : datum.rank() == 1 ? rank1 : rank2) {
      for (const auto& w : dl.weyl().ball(4)) {
        const auto I = dl.integral_I(w, cw(n));
        ++evaluated;
        if (!I.support_below_base()) bad.push_back(Json{{"lambda", n}, {"word", w.word()}});
      }
    }
    ok = ok && bad.empty();
    detail.push_back(Json{{"datum", name}, {"evaluated", evaluated}, {"violations", bad}});
  }
  return finish(4, "Finite support and dominance", ok, detail, start);
}

CheckResult macdonald_vs_oracle(const SuiteOptions& opts) {
  const auto start = Clock::now();
  const auto datum = a1();
  Json detail = Json::array();
  bool ok = true;
  for (int q : {2, 3}) {
    for (int lam : {1, 2}) {
      const auto census = padic::spherical_census(lam, opts.oracle_precision, q);
      const auto s = satake_normalized(datum, cw({2 * lam}));
      const Rational qr(q);
      Json rows = Json::array();
      bool case_ok = census.dominance_ok;
      for (int k = 0; k <= 2 * lam; ++k) {
        const int mu = lam - k;
        const auto it = census.census.find(mu);
        const std::int64_t count = it == census.census.end() ? 0 : it->second;
        const Rational weighted = Rational(count) * rational_pow(qr, mu);
        const Rational expected = rational_pow(qr, lam) * s.coefficient_at(CorootVector({k}), qr);
        case_ok = case_ok && weighted == expected;
        rows.push_back(Json{{"mu", mu}, {"count", count}, {"weighted", io::to_json(weighted)}, {"satake", io::to_json(expected)}});
      }
      for (const auto& [mu, n] : census.census)
        if (mu > lam || mu < -lam) case_ok = false;
      ok = ok && case_ok;
      detail.push_back(Json{{"q", q}, {"lambda", lam}, {"rows", rows}, {"passed", case_ok}});
    }
  }
  return finish(5, "Macdonald formula vs oracle", ok, detail, start);
}

CheckResult gk_identity(const SuiteOptions& opts) {
  const auto start = Clock::now();
  const auto datum = a1();
  const auto ups = upsilon(datum, 4);
  Json detail = Json::array();
  bool ok = true;
  for (int q : {2, 3}) {
    const auto census = padic::gk_census(4, opts.oracle_precision, q);
    const Rational qr(q);
    Json rows = Json::array();
    for (int k = 0; k <= 4; ++k) {
      const auto it = census.census.find(-k);
      const std::int64_t count = it == census.census.end() ? 0 : it->second;
      const Rational weighted = Rational(count) * rational_pow(qr, -k);
      const Rational expected = ups.coefficient_at(CorootVector({k}), qr);
      ok = ok && weighted == expected;
      rows.push_back(Json{{"k", k}, {"count", count}, {"weighted", io::to_json(weighted)}, {"upsilon", io::to_json(expected)}});
    }
    detail.push_back(Json{{"q", q}, {"rows", rows}});
  }
  return finish(6, "Gindikin-Karpelevich identity", ok, detail, start);
}

CheckResult approximation(const SuiteOptions&) {
  const auto start = Clock::now();
  const auto fin = approximation_check(a1(), {cw({2}), cw({4}), cw({6}), cw({8})}, 3);
  bool fin_ok = fin.matches_upsilon.value_or(false);
  for (std::size_t p = 0; p < fin.probes.size(); ++p) {
    const auto d = fin.probes[p].height();
    std::optional<std::size_t> expected;
    for (std::size_t k = 0; k < fin.chain.size(); ++k)
      if (fin.chain[k].pairings[0] > d) {
        expected = k;
        break;
      }
    fin_ok = fin_ok && fin.stable_from[p] == expected;
  }
  const auto aff = approximation_check(affine_a1(), {cw({2, 2}), cw({3, 3}), cw({4, 4})}, 2);
  const bool aff_ok = aff.stabilized() && !aff.matches_upsilon.has_value();
  return finish(7, "Approximation stabilization", fin_ok && aff_ok,
                Json{{"A1", io::to_json(fin)}, {"affine A1", io::to_json(aff)}}, start);
}

CheckResult iwahori_decomposition(const SuiteOptions& opts) {
  const auto start = Clock::now();
  Json detail = Json::array();
  bool ok = true;
  for (int q : {2, 3}) {
    const auto c = padic::iwahori_census(1, opts.oracle_precision, q);
    const bool case_ok = c.sums_match && c.length_bound_ok && c.spherical.total == q * q + q;
    ok = ok && case_ok;
    detail.push_back(io::to_json(c));
  }
  return finish(8, "Iwahori decomposition", ok, detail, start);
}

CheckResult poincare_polynomials(const SuiteOptions&) {
  const auto start = Clock::now();
  const WeylGroup weyl(a2().cartan);
  const auto p10 = weyl.stabilizer_poincare(cw({1, 0}));
  const auto p00 = weyl.stabilizer_poincare(cw({0, 0}));
  const VPoly v = VPoly::v();
  const bool ok = p10 == VPoly(1) + v && p00 == VPoly(1) + VPoly(2) * v + VPoly(2) * v * v + v * v * v;
  return finish(9, "Poincare polynomials", ok, Json{{"(1,0)", p10.str()}, {"(0,0)", p00.str()}}, start);
}

CheckResult multiplicities(const SuiteOptions&) {
  const auto start = Clock::now();
  struct Case {
    const char* name;
    std::vector<std::vector<std::int64_t>> gcm;
    std::size_t positive;
  };
  const std::vector<Case> cases{{"A1", {{2}}, 1},
                                {"A2", {{2, -1}, {-1, 2}}, 3},
                                {"B2", {{2, -2}, {-1, 2}}, 4},
                                {"G2", {{2, -1}, {-3, 2}}, 6},
                                {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 6}};
  Json finite = Json::array();
  bool ok = true;
  for (const auto& c : cases) {
    const auto gcm = CartanMatrix::validate(c.gcm);
    const auto roots = positive_roots(gcm, 12);
    bool case_ok = roots.size() == c.positive;
    for (const auto& r : roots) case_ok = case_ok && r.mult == 1 && r.real;
    ok = ok && case_ok;
    finite.push_back(Json{{"datum", c.name}, {"positive_roots", roots.size()}, {"passed", case_ok}});
  }
  const auto aff = affine_a1();
  const auto table = roots_up_to_height(aff.cartan, 5);
  const auto lhs = denominator_product(table, 2, 5);
  const auto rhs = alternating_rho_sum(aff.cartan, 5);
  const bool denom_ok = lhs == rhs;
  return finish(10, "Root multiplicities", ok && denom_ok,
                Json{{"finite", finite},
                     {"affine A1 denominator identity", Json{{"depth", 5}, {"product", io::to_json(lhs)}, {"alternating_sum", io::to_json(rhs)}}},
                     {"denominator_ok", denom_ok}},
                start);
}

CheckResult w_invariance(const SuiteOptions&) {
  const auto start = Clock::now();
  Json detail = Json::array();
  bool ok = true;
  for (const auto& [name, datum, lam] :
       {std::tuple{"A1", a1(), cw({2})}, std::tuple{"A2", a2(), cw({1, 1})}}) {
    const WeylGroup weyl(datum.cartan);
    const auto s = satake_normalized(datum, lam);
    bool case_ok = s.exact;
    for (std::size_t i = 0; i < datum.rank(); ++i) {
      const auto moved = act_on_series(weyl, weyl.from_word({i}), s);
      case_ok = case_ok && moved.element == s.element;
    }
    ok = ok && case_ok;
    detail.push_back(Json{{"datum", name}, {"lambda", lam.pairings}, {"terms", s.element.size()}, {"invariant", case_ok}});
  }
  return finish(11, "W-invariance", ok, detail, start);
}

CheckResult c_function(const SuiteOptions&) {
  const auto start = Clock::now();
  const auto one = [](const CorootVector&) { return Rational(1); };
  const auto c1 = finite_cfunction(a1(), one, Rational(2));
  const auto c2 = finite_cfunction(a2(), one, Rational(2));
  const bool ok = c1 == Rational(3, 2) && c2 == Rational(27, 8);
  return finish(12, "Finite c-function", ok, Json{{"A1", io::to_json(c1)}, {"A2", io::to_json(c2)}}, start);
}

const std::vector<Check>& suite() {
  static const std::vector<Check> all{hecke_quadratic,       word_independence,  rank_one_closed_form, finite_support,
                                      macdonald_vs_oracle,   gk_identity,        approximation,        iwahori_decomposition,
                                      poincare_polynomials,  multiplicities,     w_invariance,         c_function};
  return all;
}

std::vector<CheckResult> run_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> out;
  for (const auto& check : suite()) {
    try {
      out.push_back(check(opts));
    } catch (const std::exception& e) {
      CheckResult r;
      r.id = static_cast<int>(out.size()) + 1;
      r.name = "check " + std::to_string(r.id);
      r.detail = Json{{"exception", e.what()}};
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace kms::checks
