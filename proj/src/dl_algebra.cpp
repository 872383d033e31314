#include "kms/dl_algebra.hpp"

namespace kms {

AlgebraElement bc_series(SeriesKind kind, std::size_t i, std::size_t rank, std::int64_t depth) {
  if (i >= rank) throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  if (depth < 0) throw Error(Errc::InvalidParameter, "depth must be >= 0");
  AlgebraElement e(BaseCoweight::zero(rank));
  const VPoly one_minus_v = VPoly(1) - VPoly::v();
  if (kind == SeriesKind::C) e.add_term(CorootVector(rank), VPoly::v());
  const VPoly tail = kind == SeriesKind::B ? one_minus_v : -one_minus_v;
  for (std::int64_t k = 1; k <= depth; ++k) {
    CorootVector off(rank);
    off[i] = k;
    e.add_term(off, tail);
  }
  return e;
}

DemazureLusztig::DemazureLusztig(CartanMatrix gcm) : weyl_(std::move(gcm)) {}

AlgebraElement DemazureLusztig::apply_T_i(std::size_t i, const AlgebraElement& f) const {
  const auto& a = weyl_.cartan();
  if (i >= a.rank()) throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  if (f.rank() != a.rank()) throw Error(Errc::MismatchedBase, "element rank does not match GCM");
  const VPoly v = VPoly::v();
  const VPoly one_minus_v = VPoly(1) - v;
  const VPoly v_minus_one = v - VPoly(1);

  AlgebraElement out(f.base());
  for (const auto& [beta, c] : f.terms()) {
    const std::int64_t n = a.exponent_pairing(i, f.base().pairings, beta);
    if (n == 0) {
      out.add_term(beta, v * c);
    } else if (n > 0) {
      const VPoly tail = one_minus_v * c;
      CorootVector off = beta;
      for (std::int64_t k = 1; k < n; ++k) {
        off.add_at(i, 1);
        out.add_term(off, tail);
      }
      off.add_at(i, 1);
      out.add_term(off, c);
    } else {
      const std::int64_t m = -n;
      CorootVector top = beta;
      top.add_at(i, -m);
      out.add_term(top, v * c);
      const VPoly tail = v_minus_one * c;
      CorootVector off = beta;
      for (std::int64_t j = 0; j < m; ++j) {
        out.add_term(off, tail);
        off.add_at(i, -1);
      }
    }
  }
  return out;
}

AlgebraElement DemazureLusztig::apply_T_w(const std::vector<std::size_t>& word, const AlgebraElement& f) const {
  weyl_.from_word(word, true);  // NonReducedWord check
  AlgebraElement r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_T_i(*it, r);
  return r;
}

bool DemazureLusztig::hecke_quadratic_check(std::size_t i, const AlgebraElement& f) const {
  const VPoly v = VPoly::v();
  auto t1 = apply_T_i(i, f);
  auto t2 = apply_T_i(i, t1);
  return t2 == (v - VPoly(1)) * t1 + v * f;
}

AlgebraElement DemazureLusztig::integral_I(const WeylElement& w, const BaseCoweight& lambda) const {
  if (lambda.rank() != weyl_.rank()) throw Error(Errc::MismatchedBase, "coweight rank does not match GCM");
  if (!lambda.dominant() || !lambda.regular())
    throw Error(Errc::NotDominantRegular, "lambda must be dominant and regular");
  auto e = AlgebraElement::monomial(lambda, CorootVector(lambda.rank()));
  return apply_T_w(w.word(), e);
}

}  // namespace kms
