#include "kms/padic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace kms::padic {

namespace {

int mod(int x, int q) {
  int r = x % q;
  return r < 0 ? r + q : r;
}

// q is prime, so x^{q-2} inverts x.
int inv_mod(int x, int q) {
  int r = 1;
  for (int k = 0; k < q - 2; ++k) r = mod(r * x, q);
  return r;
}

void check_window(const Window& w) {
  if (w.q != 2 && w.q != 3)
    throw Error(Errc::UnsupportedResidueField, "residue field size " + std::to_string(w.q) + " (supported: 2, 3)");
  if (w.M < 0 || w.N < -w.M) throw Error(Errc::InvalidParameter, "window [-M, N) is empty");
}

void same_window(const Window& a, const Window& b) {
  if (!(a == b)) throw Error(Errc::InvalidParameter, "operands live in different windows");
}

}  // namespace

TruncatedLaurent::TruncatedLaurent(Window w) : w_(w), prec_(w.N) {
  check_window(w_);
  c_.assign(static_cast<std::size_t>(prec_ + w_.M), 0);
}

void TruncatedLaurent::set_precision(int prec) {
  prec = std::min(prec, w_.N);
  if (prec < -w_.M) throw Error(Errc::WindowUnderflow, "precision " + std::to_string(prec) + " falls below the window");
  prec_ = prec;
  c_.resize(static_cast<std::size_t>(prec_ + w_.M), 0);
}

TruncatedLaurent TruncatedLaurent::monomial(Window w, int coeff, int exponent) {
  TruncatedLaurent r(w);
  if (mod(coeff, w.q) == 0 || exponent >= w.N) return r;
  if (exponent < -w.M) throw Error(Errc::WindowUnderflow, "t^" + std::to_string(exponent) + " below the window");
  r.slot(exponent) = mod(coeff, w.q);
  return r;
}

TruncatedLaurent TruncatedLaurent::from_coeffs(Window w, int lowest_exponent, const std::vector<int>& coeffs) {
  TruncatedLaurent r(w);
  for (std::size_t k = 0; k < coeffs.size(); ++k) r += monomial(w, coeffs[k], lowest_exponent + static_cast<int>(k));
  return r;
}

int TruncatedLaurent::coeff(int e) const {
  if (e >= prec_) throw Error(Errc::InsufficientPrecision, "coefficient of t^" + std::to_string(e) + " is beyond precision");
  if (e < -w_.M) return 0;
  return slot(e);
}

std::optional<int> TruncatedLaurent::valuation() const {
  for (int e = -w_.M; e < prec_; ++e)
    if (slot(e) != 0) return e;
  return std::nullopt;
}

int TruncatedLaurent::valuation_bound() const { return valuation().value_or(prec_); }

bool TruncatedLaurent::is_zero() const { return !valuation().has_value(); }

bool TruncatedLaurent::is_integral() const {
  for (int e = -w_.M; e < std::min(prec_, 0); ++e)
    if (slot(e) != 0) return false;
  if (prec_ < 0) throw Error(Errc::InsufficientPrecision, "integrality undecidable at precision " + std::to_string(prec_));
  return true;
}

TruncatedLaurent& TruncatedLaurent::operator+=(const TruncatedLaurent& o) {
  same_window(w_, o.w_);
  set_precision(std::min(prec_, o.prec_));
  for (int e = -w_.M; e < prec_; ++e) slot(e) = mod(slot(e) + o.slot(e), w_.q);
  return *this;
}

TruncatedLaurent& TruncatedLaurent::operator-=(const TruncatedLaurent& o) {
  same_window(w_, o.w_);
  set_precision(std::min(prec_, o.prec_));
  for (int e = -w_.M; e < prec_; ++e) slot(e) = mod(slot(e) - o.slot(e), w_.q);
  return *this;
}

TruncatedLaurent TruncatedLaurent::operator-() const {
  TruncatedLaurent r = *this;
  for (auto& x : r.c_) x = mod(-x, w_.q);
  return r;
}

TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
  same_window(a.w_, b.w_);
  const Window& w = a.w_;
  const auto va = a.valuation();
  const auto vb = b.valuation();
  const int ba = va.value_or(a.prec_);
  const int bb = vb.value_or(b.prec_);
  const int prec = std::min({ba + b.prec_, bb + a.prec_, w.N});
  if (va && vb && *va + *vb < -w.M && *va + *vb < prec)
    throw Error(Errc::WindowUnderflow, "product has valuation " + std::to_string(*va + *vb) + " below the window");
  TruncatedLaurent r(w);
  r.set_precision(prec);
  if (!va || !vb) return r;
  for (int i = *va; i < a.prec_; ++i) {
    const int ai = a.slot(i);
    if (ai == 0) continue;
    for (int j = *vb; j < b.prec_ && i + j < prec; ++j) {
      if (i + j < -w.M) continue;
      r.slot(i + j) = mod(r.slot(i + j) + ai * b.slot(j), w.q);
    }
  }
  return r;
}

TruncatedLaurent TruncatedLaurent::inverse() const {
  const auto v = valuation();
  if (!v) throw Error(Errc::InsufficientPrecision, "cannot invert an element that vanishes to precision " + std::to_string(prec_));
  if (-*v < -w_.M) throw Error(Errc::WindowUnderflow, "inverse has valuation " + std::to_string(-*v) + " below the window");
  const int q = w_.q;
  // unit part u = this * t^{-v}, known modulo t^{prec - v}
  const int len = prec_ - *v;
  std::vector<int> u(static_cast<std::size_t>(len)), inv(static_cast<std::size_t>(len), 0);
  for (int k = 0; k < len; ++k) u[static_cast<std::size_t>(k)] = slot(*v + k);
  const int u0inv = inv_mod(u[0], q);
  for (int k = 0; k < len; ++k) {
    int s = k == 0 ? 1 : 0;
    for (int j = 1; j <= k; ++j) s -= u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = mod(s * u0inv, q);
  }
  TruncatedLaurent r(w_);
  r.set_precision(len - *v);
  for (int k = 0; k < len && -*v + k < r.prec_; ++k) r.slot(-*v + k) = inv[static_cast<std::size_t>(k)];
  return r;
}

TruncatedLaurent TruncatedLaurent::shifted(int k) const {
  const auto v = valuation();
  if (v && *v + k < -w_.M && *v + k < std::min(prec_ + k, w_.N))
    throw Error(Errc::WindowUnderflow, "shift by " + std::to_string(k) + " leaves the window");
  TruncatedLaurent r(w_);
  r.set_precision(prec_ + k);
  for (int e = -w_.M; e < prec_; ++e)
    if (e + k >= -w_.M && e + k < r.prec_) r.slot(e + k) = slot(e);
  return r;
}

std::string TruncatedLaurent::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = -w_.M; e < prec_; ++e) {
    if (slot(e) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << slot(e);
    if (e != 0) os << "*t^" << e;
  }
  if (first) os << "0";
  os << " + O(t^" << prec_ << ")";
  return os.str();
}

LaurentMatrix LaurentMatrix::identity(Window w) {
  return {TruncatedLaurent::monomial(w, 1, 0), TruncatedLaurent(w), TruncatedLaurent(w), TruncatedLaurent::monomial(w, 1, 0)};
}

LaurentMatrix LaurentMatrix::torus(Window w, int m) {
  return {TruncatedLaurent::monomial(w, 1, m), TruncatedLaurent(w), TruncatedLaurent(w), TruncatedLaurent::monomial(w, 1, -m)};
}

LaurentMatrix LaurentMatrix::upper(const TruncatedLaurent& x) {
  const Window& w = x.window();
  return {TruncatedLaurent::monomial(w, 1, 0), x, TruncatedLaurent(w), TruncatedLaurent::monomial(w, 1, 0)};
}

LaurentMatrix LaurentMatrix::lower(const TruncatedLaurent& x) {
  const Window& w = x.window();
  return {TruncatedLaurent::monomial(w, 1, 0), TruncatedLaurent(w), x, TruncatedLaurent::monomial(w, 1, 0)};
}

LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

TruncatedLaurent LaurentMatrix::det() const { return a * d - b * c; }

LaurentMatrix LaurentMatrix::inverse() const { return {d, -b, -c, a}; }

bool LaurentMatrix::in_K() const {
  if (!a.is_integral() || !b.is_integral() || !c.is_integral() || !d.is_integral()) return false;
  const TruncatedLaurent dt = det();
  return dt.is_integral() && dt.precision() > 0 && dt.coeff(0) != 0;
}

bool LaurentMatrix::equals(const LaurentMatrix& o) const {
  return (a - o.a).is_zero() && (b - o.b).is_zero() && (c - o.c).is_zero() && (d - o.d).is_zero();
}

int iwasawa_class(const LaurentMatrix& g) {
  const auto va = g.a.valuation();
  const auto vc = g.c.valuation();
  if (!va && !vc) throw Error(Errc::InsufficientPrecision, "first column vanishes within precision");
  if (va && vc) return std::min(*va, *vc);
  if (va) {
    if (*va > g.c.precision()) throw Error(Errc::InsufficientPrecision, "lower-left entry known only to t^" + std::to_string(g.c.precision()));
    return *va;
  }
  if (*vc > g.a.precision()) throw Error(Errc::InsufficientPrecision, "upper-left entry known only to t^" + std::to_string(g.a.precision()));
  return *vc;
}

IwasawaDecomposition iwasawa_decompose(const LaurentMatrix& g) {
  const int m = iwasawa_class(g);
  const Window& w = g.a.window();
  const auto va = g.a.valuation();
  if (va && *va == m) {
    const TruncatedLaurent ainv = g.a.inverse();
    LaurentMatrix k{g.a.shifted(-m), TruncatedLaurent(w), g.c.shifted(-m), ainv.shifted(m)};
    return {k, m, g.b * ainv};
  }
  const TruncatedLaurent cinv = g.c.inverse();
  LaurentMatrix k{g.a.shifted(-m), -cinv.shifted(m), g.c.shifted(-m), TruncatedLaurent(w)};
  return {k, m, g.d * cinv};
}

std::size_t validate_iwasawa_rule(int q, std::size_t samples, std::uint64_t seed) {
  const Window w{q, 16, 16};
  std::mt19937_64 rng(seed);
  auto rand_coeffs = [&](int count) {
    std::vector<int> cs(static_cast<std::size_t>(count));
    for (auto& c : cs) c = static_cast<int>(rng() % static_cast<std::uint64_t>(q));
    return cs;
  };
  const LaurentMatrix weyl_rep{TruncatedLaurent(w), TruncatedLaurent::monomial(w, 1, 0), TruncatedLaurent::monomial(w, -1, 0),
                               TruncatedLaurent(w)};
  for (std::size_t n = 0; n < samples; ++n) {
    LaurentMatrix k = LaurentMatrix::identity(w);
    const int steps = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < steps; ++s) {
      const TruncatedLaurent x = TruncatedLaurent::from_coeffs(w, 0, rand_coeffs(3));
      switch (rng() % 3) {
        case 0: k = k * LaurentMatrix::upper(x); break;
        case 1: k = k * LaurentMatrix::lower(x); break;
        default: k = k * weyl_rep; break;
      }
    }
    const int m = static_cast<int>(rng() % 7) - 3;
    const TruncatedLaurent x = TruncatedLaurent::from_coeffs(w, -3, rand_coeffs(7));
    const LaurentMatrix g = k * LaurentMatrix::torus(w, m) * LaurentMatrix::upper(x);
    const int got = iwasawa_class(g);
    if (got != m)
      throw std::logic_error("Iwasawa class " + std::to_string(got) + " for an element built with m = " + std::to_string(m));
    const IwasawaDecomposition dec = iwasawa_decompose(g);
    if (!dec.k.in_K()) throw std::logic_error("exhibited Iwasawa K-part is not in K");
    const LaurentMatrix back = dec.k * LaurentMatrix::torus(w, dec.m) * LaurentMatrix::upper(dec.x);
    if (!back.equals(g)) throw std::logic_error("exhibited Iwasawa decomposition does not multiply back");
  }
  return samples;
}

namespace {

// k1 and k2 lie in the same coset of Gamma = pi^{-lambda} K pi^lambda cap K iff the
// conjugate pi^lambda (k1 k2^{-1}) pi^{-lambda} is integral, i.e. the lower-left
// entry of k1 k2^{-1} vanishes to order 2 lambda.
bool same_coset(const LaurentMatrix& k1, const LaurentMatrix& k2, int lambda_m) {
  const LaurentMatrix h = k1 * k2.inverse();
  const TruncatedLaurent conj = h.c.shifted(-2 * lambda_m);
  return conj.is_integral();
}

std::vector<LaurentMatrix> gamma_cosets(const Window& w, int lambda_m) {
  std::vector<LaurentMatrix> gens;
  for (int j = 0; j < w.N; ++j) {
    gens.push_back(LaurentMatrix::upper(TruncatedLaurent::monomial(w, 1, j)));
    gens.push_back(LaurentMatrix::lower(TruncatedLaurent::monomial(w, 1, j)));
  }
  std::vector<LaurentMatrix> reps{LaurentMatrix::identity(w)};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      LaurentMatrix cand = reps[i] * g;
      bool known = false;
      for (const auto& r : reps)
        if (same_coset(r, cand, lambda_m)) {
          known = true;
          break;
        }
      if (!known) {
        reps.push_back(std::move(cand));
        queue.push_back(reps.size() - 1);
      }
    }
  }
  return reps;
}

void require_field(int q) {
  if (q != 2 && q != 3) throw Error(Errc::UnsupportedResidueField, "residue field size " + std::to_string(q) + " (supported: 2, 3)");
}

void spherical_precondition(int lambda_m, int precision, int q) {
  require_field(q);
  if (lambda_m < 0) throw Error(Errc::InvalidParameter, "lambda must be dominant (m >= 0)");
  if (precision < 2 * lambda_m + 1)
    throw Error(Errc::PrecisionTooLow,
                "precision " + std::to_string(precision) + " < 2*lambda+1 = " + std::to_string(2 * lambda_m + 1));
}

}  // namespace

CosetCensus spherical_census(int lambda_m, int precision, int q) {
  spherical_precondition(lambda_m, precision, q);
  const Window w{q, 2 * lambda_m + 2, precision};
  CosetCensus out;
  out.q = q;
  out.lambda = lambda_m;
  out.precision = precision;
  const LaurentMatrix pl = LaurentMatrix::torus(w, lambda_m);
  for (const auto& k : gamma_cosets(w, lambda_m)) {
    const int m = iwasawa_class(pl * k);
    ++out.census[m];
    ++out.total;
    if (m > lambda_m || m < -lambda_m) out.dominance_ok = false;
  }
  return out;
}

CosetCensus gk_census(int k_max, int precision, int q) {
  require_field(q);
  if (k_max < 0) throw Error(Errc::InvalidParameter, "k_max must be nonnegative");
  if (precision < 1) throw Error(Errc::PrecisionTooLow, "precision must be at least 1");
  const Window w{q, k_max + 1, precision};
  CosetCensus out;
  out.q = q;
  out.lambda = 0;
  out.precision = precision;

  std::int64_t count = 1;
  for (int j = 0; j < k_max; ++j) count *= q;
  std::vector<TruncatedLaurent> parts;
  parts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<int> cs(static_cast<std::size_t>(k_max));
    std::int64_t r = idx;
    for (int j = 0; j < k_max; ++j) {
      cs[static_cast<std::size_t>(j)] = static_cast<int>(r % q);
      r /= q;
    }
    // cs[j] is the coefficient of t^{-(j+1)}
    std::reverse(cs.begin(), cs.end());
    parts.push_back(TruncatedLaurent::from_coeffs(w, -k_max, cs));
  }
  // distinct principal parts give distinct K-cosets: u^-(x) u^-(y)^{-1} = u^-(x - y)
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (LaurentMatrix::lower(parts[i] - parts[j]).in_K()) throw std::logic_error("two principal parts share a K-coset");

  for (const auto& x : parts) {
    const int m = iwasawa_class(LaurentMatrix::lower(x));
    if (m > 0 || m < -k_max) throw std::logic_error("GK representative outside the expected class range");
    ++out.census[m];
    ++out.total;
  }
  return out;
}

namespace {

// residue field element of a reduced K entry
int residue(const TruncatedLaurent& x) { return x.coeff(0); }

// Cell of kbar = [[a, b], [c, d]] in B^- \ SL2(F_q) / U^+: "1" when kbar u(y)^{-1} is
// lower triangular for some y, "s" when kbar u(y)^{-1} s^{-1} is.
std::string bruhat_cell(int a, int b, int q) {
  bool in_one = false, in_s = false;
  for (int y = 0; y < q; ++y) {
    // kbar u(-y) = [[a, b - a y], [c, d - c y]]; right multiplying by s^{-1} = [[0, -1], [1, 0]]
    // moves -a to the top right
    if (mod(b - a * y, q) == 0) in_one = true;
    if (mod(-a, q) == 0) in_s = true;
  }
  if (in_one == in_s) throw std::logic_error("Bruhat cell of a residue matrix is not unique");
  return in_one ? "1" : "s";
}

}  // namespace

IwahoriCensus iwahori_census(int lambda_m, int precision, int q) {
  spherical_precondition(lambda_m, precision, q);
  const Window w{q, 2 * lambda_m + 2, precision};
  IwahoriCensus out;
  out.spherical.q = q;
  out.spherical.lambda = lambda_m;
  out.spherical.precision = precision;
  for (const char* label : {"1", "s"}) {
    CosetCensus& piece = out.pieces[label];
    piece.q = q;
    piece.lambda = lambda_m;
    piece.precision = precision;
  }
  const LaurentMatrix pl = LaurentMatrix::torus(w, lambda_m);
  for (const auto& k : gamma_cosets(w, lambda_m)) {
    const IwasawaDecomposition dec = iwasawa_decompose(pl * k);
    const std::string cell =
        bruhat_cell(residue(dec.k.a), residue(dec.k.b), q);
    const int length = cell == "1" ? 0 : 1;
    if (length > 2 * (lambda_m - dec.m)) out.length_bound_ok = false;
    CosetCensus& piece = out.pieces[cell];
    ++piece.census[dec.m];
    ++piece.total;
    ++out.spherical.census[dec.m];
    ++out.spherical.total;
    if (dec.m > lambda_m || dec.m < -lambda_m) out.spherical.dominance_ok = false;
  }
  for (const auto& [m, n] : out.spherical.census) {
    std::int64_t sum = 0;
    for (const auto& [label, piece] : out.pieces) {
      const auto it = piece.census.find(m);
      if (it != piece.census.end()) sum += it->second;
    }
    if (sum != n) out.sums_match = false;
  }
  return out;
}

}  // namespace kms::padic
