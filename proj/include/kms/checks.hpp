#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kms/io.hpp"

namespace kms::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Structured record of what was compared; on failure it names the mismatch.
  io::Json detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  std::size_t hecke_samples = 1000;
  int oracle_precision = 5;
};

CheckResult hecke_quadratic(const SuiteOptions& opts);
CheckResult word_independence(const SuiteOptions& opts);
CheckResult rank_one_closed_form(const SuiteOptions& opts);
CheckResult finite_support(const SuiteOptions& opts);
CheckResult macdonald_vs_oracle(const SuiteOptions& opts);
CheckResult gk_identity(const SuiteOptions& opts);
CheckResult approximation(const SuiteOptions& opts);
CheckResult iwahori_decomposition(const SuiteOptions& opts);
CheckResult poincare_polynomials(const SuiteOptions& opts);
CheckResult multiplicities(const SuiteOptions& opts);
CheckResult w_invariance(const SuiteOptions& opts);
CheckResult c_function(const SuiteOptions& opts);

using Check = std::function<CheckResult(const SuiteOptions&)>;
/// The twelve checks in order.
const std::vector<Check>& suite();
std::vector<CheckResult> run_suite(const SuiteOptions& opts = {});

/// Random element of the algebra over `base` with offsets in [-3, 3]^rank.
AlgebraElement random_element(const BaseCoweight& base, std::mt19937_64& rng);
/// Every reduced word of w.
std::vector<std::vector<std::size_t>> reduced_words(const WeylGroup& weyl, const WeylElement& w);
/// Weyl denominator side sum_w (-1)^{l(w)} e^{w rho - rho} up to the given height, on the root side
/// expressed through offsets rho - w rho.
AlgebraElement alternating_rho_sum(const CartanMatrix& gcm, std::int64_t depth);
/// prod_{alpha > 0} (1 - e^{-alpha})^{m(alpha)} over roots of the given table up to depth.
AlgebraElement denominator_product(const RootTable& table, std::size_t rank, std::int64_t depth);

}  // namespace kms::checks
