#include "kms/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kms {

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t l = rows.size();
  if (l == 0) throw Error(Errc::NotSquare, "empty matrix");
  std::vector<std::int64_t> a;
  a.reserve(l * l);
  for (const auto& r : rows) {
    if (r.size() != l) throw Error(Errc::NotSquare, "matrix is not square");
    a.insert(a.end(), r.begin(), r.end());
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i * l + i] != 2)
      throw Error(Errc::DiagonalNotTwo, "a_" + std::to_string(i) + std::to_string(i) + " != 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      if (a[i * l + j] > 0)
        throw Error(Errc::PositiveOffDiagonal,
                    "a_" + std::to_string(i) + std::to_string(j) + " = " + std::to_string(a[i * l + j]));
      if ((a[i * l + j] == 0) != (a[j * l + i] == 0))
        throw Error(Errc::AsymmetricZero, "a_" + std::to_string(i) + std::to_string(j) + " and a_" +
                                              std::to_string(j) + std::to_string(i) + " disagree on zero");
    }
  }
  return CartanMatrix(l, std::move(a));
}

CartanMatrix CartanMatrix::transpose() const {
  std::vector<std::int64_t> t(a_.size());
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) t[j * rank_ + i] = a_[i * rank_ + j];
  return CartanMatrix(rank_, std::move(t));
}

CartanMatrix CartanMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  std::vector<std::int64_t> s;
  s.reserve(idx.size() * idx.size());
  for (auto i : idx)
    for (auto j : idx) s.push_back((*this)(i, j));
  return CartanMatrix(idx.size(), std::move(s));
}

std::vector<std::vector<std::int64_t>> CartanMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[i].assign(a_.begin() + i * rank_, a_.begin() + (i + 1) * rank_);
  return r;
}

std::int64_t CartanMatrix::root_pairing(const RootVector& beta, std::size_t i) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s = checked::add(s, checked::mul(beta[j], (*this)(i, j)));
  return s;
}

std::int64_t CartanMatrix::coroot_pairing(std::size_t i, const CorootVector& beta) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s = checked::add(s, checked::mul(beta[j], (*this)(j, i)));
  return s;
}

std::int64_t CartanMatrix::exponent_pairing(std::size_t i, const std::vector<std::int64_t>& base,
                                            const CorootVector& offset) const {
  return checked::add(base.at(i), -coroot_pairing(i, offset));
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Finite: return "Finite";
    case Kind::Affine: return "Affine";
    case Kind::Indefinite: return "Indefinite";
  }
  return "?";
}

bool Classification::all(Kind k) const {
  return std::all_of(blocks.begin(), blocks.end(), [k](const Block& b) { return b.kind == k; });
}

BigInt determinant(const CartanMatrix& gcm) {
  const std::size_t n = gcm.rank();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = gcm(i, j);
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

std::vector<std::vector<std::size_t>> components(const CartanMatrix& gcm) {
  const std::size_t l = gcm.rank();
  std::vector<int> comp(l, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < l; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> block;
    std::deque<std::size_t> todo{s};
    comp[s] = static_cast<int>(out.size());
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop_front();
      block.push_back(i);
      for (std::size_t j = 0; j < l; ++j)
        if (j != i && gcm(i, j) != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          todo.push_back(j);
        }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

Kind classify_block(const CartanMatrix& block, BigInt& det) {
  const std::size_t n = block.rank();
  det = determinant(block);
  bool proper_positive = true;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (determinant(block.principal_submatrix(idx)) <= 0) {
      proper_positive = false;
      break;
    }
  }
  if (proper_positive && det > 0) return Kind::Finite;
  if (proper_positive && det == 0) return Kind::Affine;
  return Kind::Indefinite;
}

}  // namespace

Classification classify(const CartanMatrix& gcm) {
  Classification c;
  for (auto& idx : components(gcm)) {
    Block b{idx, Kind::Indefinite, 0};
    b.kind = classify_block(gcm.principal_submatrix(idx), b.determinant);
    c.blocks.push_back(std::move(b));
  }
  return c;
}

std::optional<std::vector<Rational>> symmetrizer(const CartanMatrix& gcm) {
  const std::size_t l = gcm.rank();
  std::vector<Rational> eps(l, Rational(0));
  for (auto& block : components(gcm)) {
    eps[block.front()] = 1;
    std::deque<std::size_t> todo{block.front()};
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop_front();
      for (auto j : block) {
        if (j == i || gcm(i, j) == 0) continue;
        Rational want = eps[i] * gcm(i, j) / gcm(j, i);
        if (eps[j] == 0) {
          eps[j] = want;
          todo.push_back(j);
        } else if (eps[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return eps;
}

namespace {

/// All beta in Q_+ with the given height, in lexicographic order.
void vectors_of_height(std::size_t rank, std::int64_t h, std::vector<LatticeVec>& out) {
  LatticeVec cur(rank);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) {
    if (pos + 1 == rank) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, h);
}

std::int64_t gcd_of(const LatticeVec& v) {
  std::int64_t g = 0;
  for (auto x : v.coeffs()) g = std::gcd(g, x);
  return g;
}

std::vector<LatticeVec> real_positive_roots(const CartanMatrix& gcm, std::optional<std::int64_t> H) {
  const std::size_t l = gcm.rank();
  std::set<LatticeVec> seen;
  std::deque<LatticeVec> todo;
  for (std::size_t i = 0; i < l; ++i) {
    auto a = LatticeVec::unit(l, i);
    seen.insert(a);
    todo.push_back(a);
  }
  while (!todo.empty()) {
    auto beta = todo.front();
    todo.pop_front();
    for (std::size_t i = 0; i < l; ++i) {
      auto p = gcm.root_pairing(beta, i);
      if (p == 0) continue;
      LatticeVec img = beta;
      img.add_at(i, -p);
      if (!img.is_nonnegative()) continue;  // beta = alpha_i
      if (H && img.height() > *H) continue;
      if (seen.insert(img).second) todo.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

bool by_height(const LatticeVec& a, const LatticeVec& b) {
  auto ha = a.height(), hb = b.height();
  return ha != hb ? ha < hb : a > b;
}

}  // namespace

std::map<LatticeVec, std::int64_t> peterson_multiplicities(const CartanMatrix& gcm, std::int64_t H) {
  if (H < 1) throw Error(Errc::HeightBoundTooSmall, "height bound must be >= 1");
  auto eps_opt = symmetrizer(gcm);
  if (!eps_opt) throw Error(Errc::NotSymmetrizable, "Peterson recursion needs a symmetrizable GCM");
  const auto& eps = *eps_opt;
  const std::size_t l = gcm.rank();

  auto form = [&](const LatticeVec& x, const LatticeVec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < l; ++j)
        if (y[j] != 0) s += eps[i] * gcm(i, j) * x[i] * y[j];
    }
    return s;
  };

  std::map<LatticeVec, Rational> c;
  std::map<LatticeVec, std::int64_t> mult;
  for (std::int64_t h = 1; h <= H; ++h) {
    std::vector<LatticeVec> layer;
    vectors_of_height(l, h, layer);
    for (const auto& beta : layer) {
      Rational cb;
      if (h == 1) {
        cb = 1;
      } else {
        // sum over beta' + beta'' = beta with both parts nonzero
        Rational rhs = 0;
        LatticeVec part(l);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
          if (pos == l) {
            if (part.is_zero() || part == beta) return;
            auto it1 = c.find(part);
            if (it1 == c.end()) return;
            auto rest = beta - part;
            auto it2 = c.find(rest);
            if (it2 == c.end()) return;
            rhs += form(part, rest) * it1->second * it2->second;
            return;
          }
          for (std::int64_t k = 0; k <= beta[pos]; ++k) {
            part[pos] = k;
            rec(pos + 1);
          }
          part[pos] = 0;
        };
        rec(0);
        Rational two_rho = 0;
        for (std::size_t i = 0; i < l; ++i) two_rho += 2 * eps[i] * beta[i];
        Rational denom = form(beta, beta) - two_rho;
        if (denom == 0) {
          if (rhs != 0) throw std::logic_error("Peterson recursion: vanishing (beta|beta-2rho) at " + beta.str());
          cb = 0;
        } else {
          cb = rhs / denom;
        }
      }
      if (cb == 0) continue;
      c[beta] = cb;
      Rational m = cb;
      auto g = gcd_of(beta);
      for (std::int64_t k = 2; k <= g; ++k) {
        if (g % k) continue;
        LatticeVec sub = beta;
        for (std::size_t i = 0; i < l; ++i) sub[i] /= k;
        auto it = mult.find(sub);
        if (it != mult.end()) m -= Rational(it->second, k);
      }
      if (denominator(m) != 1 || m < 0)
        throw std::logic_error("Peterson recursion produced non-integral multiplicity at " + beta.str());
      if (m != 0) mult[beta] = static_cast<std::int64_t>(numerator(m));
    }
  }
  return mult;
}

std::vector<RootEntry> positive_roots(const CartanMatrix& gcm, std::int64_t H) {
  if (H < 1) throw Error(Errc::HeightBoundTooSmall, "height bound must be >= 1");
  auto real = real_positive_roots(gcm, H);
  std::vector<RootEntry> out;
  std::set<LatticeVec> real_set(real.begin(), real.end());
  auto cls = classify(gcm);
  if (cls.finite() || H == 1) {
    for (auto& r : real) out.push_back({r, 1, true});
  } else {
    auto mult = peterson_multiplicities(gcm, H);
    for (auto& [beta, m] : mult) {
      bool is_real = real_set.count(beta) > 0;
      if (is_real && m != 1) throw std::logic_error("real root with multiplicity != 1: " + beta.str());
      out.push_back({beta, m, is_real});
    }
    for (auto& r : real)
      if (!mult.count(r)) throw std::logic_error("Peterson recursion missed real root " + r.str());
  }
  std::sort(out.begin(), out.end(), [](const RootEntry& a, const RootEntry& b) { return by_height(a.root, b.root); });
  return out;
}

RootTable roots_up_to_height(const CartanMatrix& gcm, std::int64_t H) {
  RootTable t;
  t.height_bound = H;
  t.roots = positive_roots(gcm, H);
  t.coroots = positive_roots(gcm.transpose(), H);
  return t;
}

std::vector<RootVector> finite_positive_roots(const CartanMatrix& gcm) {
  if (!classify(gcm).finite()) throw Error(Errc::NotFiniteType, "GCM is not of finite type");
  auto r = real_positive_roots(gcm, std::nullopt);
  std::sort(r.begin(), r.end(), by_height);
  return r;
}

namespace {

std::int64_t lookup(const std::vector<RootEntry>& rows, std::int64_t bound, const LatticeVec& v) {
  if (!v.is_nonnegative() || v.is_zero()) return 0;
  if (v.height() > bound)
    throw Error(Errc::TableTooShallow, "height " + std::to_string(v.height()) + " exceeds table bound " +
                                           std::to_string(bound));
  for (const auto& e : rows)
    if (e.root == v) return e.mult;
  return 0;
}

}  // namespace

std::int64_t RootTable::coroot_mult(const CorootVector& c) const { return lookup(coroots, height_bound, c); }
std::int64_t RootTable::root_mult(const RootVector& r) const { return lookup(roots, height_bound, r); }

RootDatum RootDatum::from_matrix(const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::string> labels) {
  auto gcm = CartanMatrix::validate(rows);
  if (labels.empty())
    for (std::size_t i = 0; i < gcm.rank(); ++i) labels.push_back("a" + std::to_string(i));
  if (labels.size() != gcm.rank()) throw Error(Errc::ParseError, "label count does not match GCM size");
  auto cls = classify(gcm);
  return RootDatum{std::move(gcm), std::move(labels), std::move(cls)};
}

bool dominance_leq(const Exponent& mu, const Exponent& lambda) {
  if (!(mu.base == lambda.base)) throw Error(Errc::MismatchedBase, "exponents have different base coweights");
  return (mu.offset - lambda.offset).is_nonnegative();
}

}  // namespace kms
