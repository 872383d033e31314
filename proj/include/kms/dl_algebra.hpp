#pragma once

#include <vector>

#include "kms/algebra.hpp"
#include "kms/root_datum.hpp"
#include "kms/weyl.hpp"

namespace kms {

enum class SeriesKind { B, C };

/// b(alpha_i^vee) = (v-1)/(1-e^{alpha_i^vee}) or c(alpha_i^vee) = (1-v e^{alpha_i^vee})/(1-e^{alpha_i^vee}),
/// expanded in e^{-alpha_i^vee} and truncated at depth D. Result lives over the
/// zero coweight.
AlgebraElement bc_series(SeriesKind kind, std::size_t i, std::size_t rank, std::int64_t depth);

/// Demazure-Lusztig operators T_i = c(alpha_i^vee)[s_i] + b(alpha_i^vee)[1].
///
/// On a monomial e^mu with n = <alpha_i, mu> the two geometric tails telescope:
///   n >= 1:  sum_{k=1}^{n-1} (1-v) e^{mu - k alpha_i^vee} + e^{mu - n alpha_i^vee}
///   n == 0:  v e^mu
///   n <= -1: v e^{mu + |n| alpha_i^vee} + (v-1) sum_{m=0}^{|n|-1} e^{mu + m alpha_i^vee}
/// so images of finite elements stay finite and no truncation is involved.
class DemazureLusztig {
 public:
  explicit DemazureLusztig(CartanMatrix gcm);

  const WeylGroup& weyl() const noexcept { return weyl_; }

  AlgebraElement apply_T_i(std::size_t i, const AlgebraElement& f) const;

  /// T_{i_1} T_{i_2} ... T_{i_k} f (the last letter acts first). The word must
  /// be reduced; throws NonReducedWord otherwise.
  AlgebraElement apply_T_w(const std::vector<std::size_t>& word, const AlgebraElement& f) const;

  /// T_i^2 f == (v-1) T_i f + v f, exactly.
  bool hecke_quadratic_check(std::size_t i, const AlgebraElement& f) const;

  /// The base-normalized integral T_w(e^{lambda^vee}); the scalar q^{-<rho,lambda^vee>}
  /// is left implicit. lambda must be dominant and regular.
  AlgebraElement integral_I(const WeylElement& w, const BaseCoweight& lambda) const;

 private:
  WeylGroup weyl_;
};

}  // namespace kms
