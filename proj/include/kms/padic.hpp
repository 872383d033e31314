#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kms/error.hpp"

namespace kms::padic {

/// Residue field size q (prime, 2 or 3) and the exponent window [-M, N).
struct Window {
  int q = 2;
  int M = 0;  // most negative admissible exponent is -M
  int N = 1;  // coefficients at exponents >= N are truncated

  friend bool operator==(const Window&, const Window&) = default;
};

/// Element of F_q((t)) known modulo t^prec (prec <= N). Coefficients below -M
/// are an error (WindowUnderflow); those at or above prec are unknown.
class TruncatedLaurent {
 public:
  explicit TruncatedLaurent(Window w);  // zero, precision N

  static TruncatedLaurent monomial(Window w, int coeff, int exponent);
  static TruncatedLaurent from_coeffs(Window w, int lowest_exponent, const std::vector<int>& coeffs);

  const Window& window() const noexcept { return w_; }
  int precision() const noexcept { return prec_; }
  /// Coefficient at t^e; e must be below the precision.
  int coeff(int e) const;

  /// Valuation, or nullopt when the element vanishes modulo t^prec.
  std::optional<int> valuation() const;
  /// Lower bound on the valuation (prec when the known part vanishes).
  int valuation_bound() const;
  bool is_zero() const;  // within precision
  /// Membership in O; throws InsufficientPrecision when undecidable.
  bool is_integral() const;

  TruncatedLaurent& operator+=(const TruncatedLaurent& o);
  TruncatedLaurent& operator-=(const TruncatedLaurent& o);
  TruncatedLaurent operator-() const;
  friend TruncatedLaurent operator+(TruncatedLaurent a, const TruncatedLaurent& b) { return a += b; }
  friend TruncatedLaurent operator-(TruncatedLaurent a, const TruncatedLaurent& b) { return a -= b; }
  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b);

  /// Multiplicative inverse; requires a known valuation.
  TruncatedLaurent inverse() const;
  /// this * t^k
  TruncatedLaurent shifted(int k) const;

  std::string str() const;

 private:
  int& slot(int e) { return c_[static_cast<std::size_t>(e + w_.M)]; }
  int slot(int e) const { return c_[static_cast<std::size_t>(e + w_.M)]; }
  void set_precision(int prec);

  Window w_;
  int prec_;
  std::vector<int> c_;  // exponents -M .. prec-1
};

/// 2x2 matrix over the truncated Laurent field; stands in for SL2(K).
struct LaurentMatrix {
  TruncatedLaurent a, b, c, d;  // [[a, b], [c, d]]

  static LaurentMatrix identity(Window w);
  /// pi^{m alpha^vee} = diag(t^m, t^{-m})
  static LaurentMatrix torus(Window w, int m);
  static LaurentMatrix upper(const TruncatedLaurent& x);  // [[1, x], [0, 1]]
  static LaurentMatrix lower(const TruncatedLaurent& x);  // [[1, 0], [x, 1]]

  friend LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y);
  TruncatedLaurent det() const;
  /// Adjugate, the inverse for determinant one.
  LaurentMatrix inverse() const;
  /// Entries in O and determinant a unit.
  bool in_K() const;
  /// Entrywise equality modulo each difference's precision.
  bool equals(const LaurentMatrix& o) const;
};

/// The unique m with g in K pi^{m alpha^vee} U^+: the minimum valuation of the
/// first column. Throws InsufficientPrecision when the window cannot decide it.
int iwasawa_class(const LaurentMatrix& g);

/// g = k * torus(m) * upper(x) with k in K, exhibited explicitly.
struct IwasawaDecomposition {
  LaurentMatrix k;
  int m;
  TruncatedLaurent x;
};
IwasawaDecomposition iwasawa_decompose(const LaurentMatrix& g);

/// Randomized certification of the valuation rule: builds g = k pi^m u from
/// random k in K and u in U^+, checks iwasawa_class(g) == m and that the
/// exhibited decomposition multiplies back to g. Returns the number of samples
/// checked; throws std::logic_error on the first disagreement.
std::size_t validate_iwasawa_rule(int q, std::size_t samples, std::uint64_t seed);

struct CosetCensus {
  int q = 2;
  int lambda = 0;
  int precision = 0;
  /// mu^vee = m alpha^vee  ->  number of cosets. Keys iterate ascending; JSON
  /// output orders them descending.
  std::map<int, std::int64_t> census;
  std::int64_t total = 0;
  /// No coset lies outside {mu <= lambda}.
  bool dominance_ok = true;
};

/// K \ K pi^{lambda alpha^vee} K refined by Iwasawa class. Coset representatives
/// pi^lambda k run over (pi^{-lambda} K pi^lambda cap K) \ K, found by closing the
/// trivial coset under right multiplication by elementary generators of K
/// modulo t^precision.
CosetCensus spherical_census(int lambda_m, int precision, int q);

/// K \ K U^- cap K pi^{-k alpha^vee} U^+ for 0 <= k <= k_max, from representatives
/// u^-(x) with x a principal part of degree <= k_max.
CosetCensus gk_census(int k_max, int precision, int q);

/// Per Weyl element ("1" or "s") censuses; the cell of a coset is read off the
/// reduction mod t of the K-part of its Iwasawa decomposition in
/// B^- \ SL2(F_q) / U^+.
struct IwahoriCensus {
  std::map<std::string, CosetCensus> pieces;
  CosetCensus spherical;
  /// Pieces sum to the spherical census for every mu.
  bool sums_match = true;
  /// Every contributing w has l(w) <= 2 <rho, lambda - mu>.
  bool length_bound_ok = true;
};
IwahoriCensus iwahori_census(int lambda_m, int precision, int q);

}  // namespace kms::padic
