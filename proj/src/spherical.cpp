#include "kms/spherical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kms {

namespace {

constexpr std::size_t kMaxWeylTerms = 2'000'000;

/// 1 + (1-v) sum_{k>=1} e^{-k gamma}, or with `flipped` the expansion
/// v + (v-1) sum_{k>=1} e^{-k gamma} of (1 - v e^{gamma}) / (1 - e^{gamma}).
AlgebraElement geometric_factor(const CorootVector& gamma, std::int64_t room, bool flipped) {
  const std::size_t l = gamma.rank();
  AlgebraElement f(BaseCoweight::zero(l));
  const VPoly v = VPoly::v();
  f.add_term(CorootVector(l), flipped ? v : VPoly(1));
  const VPoly tail = flipped ? v - VPoly(1) : VPoly(1) - v;
  const auto h = gamma.height();
  CorootVector off(l);
  for (std::int64_t k = 1; k * h <= room; ++k) {
    off += gamma;
    f.add_term(off, tail);
  }
  return f;
}

std::vector<RootEntry> coroot_rows(const RootDatum& datum, std::int64_t depth) {
  if (depth < 1) return {};
  const auto at = datum.cartan.transpose();
  if (datum.classification.finite()) {
    std::vector<RootEntry> out;
    for (auto& r : finite_positive_roots(at))
      if (r.height() <= depth) out.push_back({r, 1, true});
    return out;
  }
  return positive_roots(at, depth);
}

TruncatedSeries upsilon_from_rows(const RootDatum& datum, const std::vector<RootEntry>& rows, std::int64_t depth) {
  const std::size_t l = datum.rank();
  TruncatedSeries s;
  s.depth = depth;
  s.element = AlgebraElement::monomial(BaseCoweight::zero(l), CorootVector(l));
  for (const auto& row : rows) {
    if (row.root.height() > depth) continue;
    auto f = geometric_factor(row.root, depth, false);
    for (std::int64_t k = 0; k < row.mult; ++k) s.element = multiply(s.element, f, depth);
  }
  if (!datum.classification.finite()) s.omitted_factors.push_back("m-factor");
  return s;
}

/// Every w with height(lambda - w lambda) <= depth. Heights never decrease
/// along left ascents when lambda is dominant, so out-of-window nodes are pruned.
std::vector<WeylElement> in_window_elements(const WeylGroup& W, const BaseCoweight& lambda, std::int64_t depth,
                                            std::optional<std::size_t> ball_bound) {
  std::vector<WeylElement> out{W.identity()};
  std::vector<WeylElement> frontier{W.identity()};
  std::size_t len = 0;
  while (!frontier.empty()) {
    ++len;
    std::map<CorootVector, WeylElement> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < W.rank(); ++i) {
        if (!W.has_left_ascent(w, i)) continue;
        auto u = W.apply_generator(w, i);
        if (W.base_offset(u, lambda.pairings).height() > depth) continue;
        next.emplace(u.normal_form(), std::move(u));
      }
    if (next.empty()) break;
    if (ball_bound && len > *ball_bound)
      throw Error(Errc::BallTooSmall, "an element of length " + std::to_string(len) +
                                          " beyond the ball bound still contributes in-window");
    frontier.clear();
    for (auto& [key, w] : next) frontier.push_back(std::move(w));
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (out.size() > kMaxWeylTerms)
      throw Error(Errc::BallTooSmall, "in-window Weyl sum exceeds the enumeration cap");
  }
  return out;
}

}  // namespace

Rational TruncatedSeries::coefficient_at(const CorootVector& offset, const Rational& q) const {
  return element.coefficient(offset).at_inverse_q(q) / denominator.at_inverse_q(q);
}

std::map<CorootVector, Rational> TruncatedSeries::evaluate_at(const Rational& q) const {
  if (q <= 1) throw Error(Errc::InvalidParameter, "evaluation requires q > 1");
  auto d = denominator.at_inverse_q(q);
  auto vals = element.evaluate_at(q);
  for (auto& [off, x] : vals) x /= d;
  return vals;
}

TruncatedSeries upsilon(const RootDatum& datum, const RootTable& table, std::int64_t depth) {
  if (depth < 0) throw Error(Errc::InvalidParameter, "depth must be >= 0");
  if (depth > 0 && table.height_bound < depth)
    throw Error(Errc::TableTooShallow, "coroot table covers height " + std::to_string(table.height_bound) +
                                           " < depth " + std::to_string(depth));
  return upsilon_from_rows(datum, table.coroots, depth);
}

TruncatedSeries upsilon(const RootDatum& datum, std::int64_t depth) {
  if (depth < 0) throw Error(Errc::InvalidParameter, "depth must be >= 0");
  return upsilon_from_rows(datum, coroot_rows(datum, depth), depth);
}

std::int64_t satake_support_depth(const RootDatum& datum, const BaseCoweight& lambda) {
  WeylGroup W(datum.cartan);
  std::int64_t best = 0;
  for (const auto& w : W.finite_elements()) best = std::max(best, W.base_offset(w, lambda.pairings).height());
  return best;
}

TruncatedSeries satake_normalized(const RootDatum& datum, const BaseCoweight& lambda, const SatakeOptions& opts) {
  const std::size_t l = datum.rank();
  if (lambda.rank() != l) throw Error(Errc::MismatchedBase, "coweight rank does not match GCM");
  if (!lambda.dominant()) throw Error(Errc::InvalidParameter, "lambda must be dominant");
  WeylGroup W(datum.cartan);
  const VPoly poincare = W.stabilizer_poincare(lambda);

  const bool finite = datum.classification.finite();
  std::int64_t depth;
  bool exact = false;
  if (finite) {
    const auto full = satake_support_depth(datum, lambda);
    depth = opts.depth.value_or(full);
    exact = depth >= full;
  } else {
    if (!opts.depth) throw Error(Errc::InvalidParameter, "depth is required for infinite Weyl groups");
    depth = *opts.depth;
  }
  if (depth < 0) throw Error(Errc::InvalidParameter, "depth must be >= 0");

  const auto rows = coroot_rows(datum, depth);
  AlgebraElement sum(BaseCoweight::zero(l));
  for (const auto& w : in_window_elements(W, lambda, depth, opts.ball_bound)) {
    const auto start = W.base_offset(w, lambda.pairings);
    const auto room = depth - start.height();
    auto term = AlgebraElement::monomial(BaseCoweight::zero(l), start);
    const auto inv = W.inversion_coroots(w);
    const std::set<CorootVector> inv_set(inv.begin(), inv.end());
    for (const auto& gamma : inv) term = multiply(term, geometric_factor(gamma, room, true), depth);
    for (const auto& row : rows) {
      if (row.root.height() > room || inv_set.count(row.root)) continue;
      auto f = geometric_factor(row.root, room, false);
      for (std::int64_t k = 0; k < row.mult; ++k) term = multiply(term, f, depth);
    }
    sum += term;
  }

  TruncatedSeries s;
  s.depth = depth;
  s.exact = exact;
  s.element = AlgebraElement(lambda);
  bool divisible = true;
  AlgebraElement divided(lambda);
  for (const auto& [off, c] : sum.terms()) {
    auto qt = c.divide_exact(poincare);
    if (!qt) {
      divisible = false;
      break;
    }
    divided.add_term(off, *qt);
  }
  if (divisible) {
    s.element = std::move(divided);
  } else {
    s.element = sum.rebased(lambda);
    s.denominator = poincare;
  }
  if (!finite) s.omitted_factors.push_back("m-factor");
  return s;
}

TruncatedSeries gk_shift(const BaseCoweight& lambda, const TruncatedSeries& g0) {
  TruncatedSeries s = g0;
  s.element = g0.element.rebased(g0.element.base() + lambda);
  return s;
}

TruncatedSeries act_on_series(const WeylGroup& W, const WeylElement& w, const TruncatedSeries& s) {
  TruncatedSeries r = s;
  r.element = AlgebraElement(s.element.base());
  for (const auto& [off, c] : s.element.terms())
    r.element.add_term(W.act_on_exponent(w, Exponent{s.element.base(), off}).offset, c);
  return r;
}

StabilizationReport approximation_check(const RootDatum& datum, const std::vector<BaseCoweight>& chain,
                                        std::int64_t depth) {
  if (depth < 0) throw Error(Errc::InvalidParameter, "depth must be >= 0");
  if (chain.empty()) throw Error(Errc::InvalidChain, "empty chain");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const auto& lam = chain[k];
    if (lam.rank() != datum.rank()) throw Error(Errc::InvalidChain, "chain element has wrong rank");
    if (!lam.dominant() || !lam.regular())
      throw Error(Errc::InvalidChain, "chain elements must be dominant and regular");
    if (k > 0)
      for (std::size_t i = 0; i < lam.rank(); ++i)
        if (lam.pairings[i] <= chain[k - 1].pairings[i])
          throw Error(Errc::InvalidChain, "chain must increase strictly in every pairing coordinate");
  }

  StabilizationReport rep;
  rep.depth = depth;
  rep.chain = chain;
  std::vector<TruncatedSeries> series;
  std::set<CorootVector> probes;
  for (const auto& lam : chain) {
    series.push_back(satake_normalized(datum, lam, SatakeOptions{depth, std::nullopt}));
    for (const auto& [off, c] : series.back().element.terms())
      if (off.height() <= depth) probes.insert(off);
  }
  const bool finite = datum.classification.finite();
  std::optional<TruncatedSeries> ups;
  if (finite) {
    ups = upsilon(datum, depth);
    for (const auto& [off, c] : ups->element.terms()) probes.insert(off);
  }
  rep.probes.assign(probes.begin(), probes.end());

  bool all_stable = true;
  std::size_t first = 0;
  for (const auto& p : rep.probes) {
    std::vector<VPoly> trace;
    for (const auto& s : series) trace.push_back(s.element.coefficient(p));
    std::size_t k = trace.size() - 1;
    while (k > 0 && trace[k - 1] == trace.back()) --k;
    std::optional<std::size_t> st;
    if (k + 2 <= trace.size()) st = k;
    if (!st) all_stable = false;
    else first = std::max(first, *st);
    rep.traces.push_back(std::move(trace));
    rep.stable_from.push_back(st);
  }
  if (all_stable) rep.first_stable_index = first;

  if (finite) {
    bool eq = all_stable;
    if (eq)
      for (std::size_t p = 0; p < rep.probes.size(); ++p)
        if (!(rep.traces[p].back() == ups->element.coefficient(rep.probes[p]))) eq = false;
    rep.matches_upsilon = eq;
  } else {
    rep.notes.push_back("equality with Upsilon not checked: the affine m-factor is not modelled");
  }
  return rep;
}

Rational finite_cfunction(const RootDatum& datum, const std::function<Rational(const CorootVector&)>& v,
                          const Rational& q) {
  if (!datum.classification.finite()) throw Error(Errc::NotFiniteType, "c-function needs a finite-type datum");
  if (q <= 1) throw Error(Errc::InvalidParameter, "q must exceed 1");
  Rational prod = 1;
  for (const auto& gamma : finite_positive_roots(datum.cartan.transpose())) {
    Rational x = v(gamma);
    if (x == 0) throw Error(Errc::PoleAtCoroot, "v vanishes at coroot " + gamma.str());
    if (denominator(x) != 1)
      throw Error(Errc::NonIntegralExponent, "v(" + gamma.str() + ") = " + to_string(x) + " is not an integer");
    if (x < 0) throw Error(Errc::InvalidParameter, "v(" + gamma.str() + ") lies outside the convergence region");
    const auto e = static_cast<long long>(numerator(x));
    prod *= (1 - rational_pow(q, -1 - e)) / (1 - rational_pow(q, -e));
  }
  return prod;
}

}  // namespace kms
