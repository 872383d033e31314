#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kms/algebra.hpp"
#include "kms/root_datum.hpp"
#include "kms/weyl.hpp"

namespace kms {

/// A base-relative series  (1/denominator) * sum_beta c_beta(v) e^{lambda^vee - beta},
/// known on the window height(beta) <= depth.
struct TruncatedSeries {
  AlgebraElement element;
  VPoly denominator = VPoly(1);
  std::int64_t depth = 0;
  /// True when the window covers the full (finite) support.
  bool exact = false;
  std::vector<std::string> omitted_factors;

  /// Coefficient at `offset` divided by the denominator, evaluated at v = 1/q.
  Rational coefficient_at(const CorootVector& offset, const Rational& q) const;
  std::map<CorootVector, Rational> evaluate_at(const Rational& q) const;
};

/// Upsilon = prod_{alpha^vee > 0} ((1 - v e^{-alpha^vee}) / (1 - e^{-alpha^vee}))^{m(alpha^vee)},
/// truncated at depth D. The affine correction factor is not included; it is
/// listed in `omitted_factors` for non-finite data.
TruncatedSeries upsilon(const RootDatum& datum, const RootTable& table, std::int64_t depth);
TruncatedSeries upsilon(const RootDatum& datum, std::int64_t depth);

struct SatakeOptions {
  /// Window depth; defaults to the full support for finite type and is
  /// required otherwise.
  std::optional<std::int64_t> depth;
  /// Length bound on the Weyl sum; when unset every in-window element is found
  /// by a pruned search.
  std::optional<std::size_t> ball_bound;
};

/// S_lambda / (q^{<rho,lambda^vee>} e^{lambda^vee}) from Macdonald's formula:
/// (1 / W_lambda(v)) sum_w w(Upsilon) e^{w lambda^vee - lambda^vee}, every w(Upsilon)
/// factor expanded towards negative coroots.
TruncatedSeries satake_normalized(const RootDatum& datum, const BaseCoweight& lambda, const SatakeOptions& opts = {});

/// Depth of the full support of S_lambda for finite type: height(lambda - w0 lambda).
std::int64_t satake_support_depth(const RootDatum& datum, const BaseCoweight& lambda);

/// Rebases g0 onto lambda^vee: G_lambda = q^{<rho,lambda^vee>} e^{lambda^vee} G_0 with the
/// scalar left implicit.
TruncatedSeries gk_shift(const BaseCoweight& lambda, const TruncatedSeries& g0);

/// Applies w to every exponent of a full-support series; used for W-invariance.
TruncatedSeries act_on_series(const WeylGroup& weyl, const WeylElement& w, const TruncatedSeries& s);

struct StabilizationReport {
  std::int64_t depth = 0;
  std::vector<BaseCoweight> chain;
  std::vector<CorootVector> probes;
  /// traces[p][k]: coefficient of probe p for chain element k (numerator over
  /// the series denominator, which is 1 for regular chains).
  std::vector<std::vector<VPoly>> traces;
  /// Smallest k from which the trace is constant, provided that covers at
  /// least two chain elements.
  std::vector<std::optional<std::size_t>> stable_from;
  std::optional<std::size_t> first_stable_index;
  /// Stable values compared with Upsilon; only for finite type.
  std::optional<bool> matches_upsilon;
  std::vector<std::string> notes;

  bool stabilized() const { return first_stable_index.has_value(); }
};

StabilizationReport approximation_check(const RootDatum& datum, const std::vector<BaseCoweight>& chain,
                                        std::int64_t depth);

/// Macdonald's c-function  prod_{alpha^vee > 0} (1 - q^{-1-v(alpha^vee)}) / (1 - q^{-v(alpha^vee)})
/// for finite type; v must take positive integer values.
Rational finite_cfunction(const RootDatum& datum, const std::function<Rational(const CorootVector&)>& v,
                          const Rational& q);

}  // namespace kms
