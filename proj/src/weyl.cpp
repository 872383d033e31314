#include "kms/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kms {

namespace {

std::vector<std::int64_t> identity_matrix(std::size_t l) {
  std::vector<std::int64_t> m(l * l, 0);
  for (std::size_t i = 0; i < l; ++i) m[i * l + i] = 1;
  return m;
}

// row_i <- row_i - sum_j a_ji row_j  (left multiplication by s_i on Q^vee)
void reflect_rows(const CartanMatrix& a, std::vector<std::int64_t>& m, std::size_t i) {
  const std::size_t l = a.rank();
  std::vector<std::int64_t> row(m.begin() + i * l, m.begin() + (i + 1) * l);
  for (std::size_t j = 0; j < l; ++j) {
    auto aji = a(j, i);
    if (aji == 0) continue;
    for (std::size_t c = 0; c < l; ++c) row[c] = checked::add(row[c], -checked::mul(aji, m[j * l + c]));
  }
  std::copy(row.begin(), row.end(), m.begin() + i * l);
}

std::vector<std::int64_t> mat_vec(const std::vector<std::int64_t>& m, std::size_t l,
                                  const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> r(l, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) r[i] = checked::add(r[i], checked::mul(m[i * l + j], x[j]));
  return r;
}

bool by_length(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.normal_form() < b.normal_form();
}

}  // namespace

WeylGroup::WeylGroup(CartanMatrix gcm) : a_(std::move(gcm)) {}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.offset_ = CorootVector(rank());
  e.m_ = identity_matrix(rank());
  e.b_ = std::vector<std::int64_t>(rank() * rank(), 0);
  return e;
}

bool WeylGroup::has_left_ascent(const WeylElement& w, std::size_t i) const {
  if (i >= rank()) throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  return a_.exponent_pairing(i, std::vector<std::int64_t>(rank(), 1), w.offset_) > 0;
}

WeylElement WeylGroup::apply_generator(const WeylElement& w, std::size_t i) const {
  if (i >= rank()) throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  const std::size_t l = rank();
  const auto p = a_.exponent_pairing(i, std::vector<std::int64_t>(l, 1), w.offset_);
  WeylElement r = w;
  r.offset_.add_at(i, p);
  reflect_rows(a_, r.m_, i);
  // B'_i = B_i + e_i - sum_j a_ji B_j
  std::vector<std::int64_t> row(r.b_.begin() + i * l, r.b_.begin() + (i + 1) * l);
  row[i] = checked::add(row[i], 1);
  for (std::size_t j = 0; j < l; ++j) {
    auto aji = a_(j, i);
    if (aji == 0) continue;
    for (std::size_t c = 0; c < l; ++c) row[c] = checked::add(row[c], -checked::mul(aji, w.b_[j * l + c]));
  }
  std::copy(row.begin(), row.end(), r.b_.begin() + i * l);

  if (p > 0) {
    r.word_.insert(r.word_.begin(), i);
    return r;
  }
  // descent: delete one letter (exchange property) to keep the word reduced
  for (std::size_t k = 0; k < w.word_.size(); ++k) {
    std::vector<std::size_t> cand = w.word_;
    cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(k));
    if (from_word(cand, false).offset_ == r.offset_) {
      r.word_ = std::move(cand);
      return r;
    }
  }
  throw std::logic_error("exchange property failed in apply_generator");
}

WeylElement WeylGroup::from_word(const std::vector<std::size_t>& word, bool require_reduced) const {
  WeylElement w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= rank()) throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(*it));
    if (!has_left_ascent(w, *it)) {
      if (require_reduced) throw Error(Errc::NonReducedWord, "word is not reduced");
      w = apply_generator(w, *it);
      continue;
    }
    w = apply_generator(w, *it);
  }
  if (w.word_.size() == word.size()) w.word_ = word;
  return w;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  std::vector<std::size_t> rev(w.word_.rbegin(), w.word_.rend());
  return from_word(rev, true);
}

WeylElement WeylGroup::multiply(const WeylElement& x, const WeylElement& y) const {
  WeylElement r = y;
  for (auto it = x.word_.rbegin(); it != x.word_.rend(); ++it) r = apply_generator(r, *it);
  return r;
}

std::vector<WeylElement> WeylGroup::ball(std::size_t L) const {
  std::vector<WeylElement> out{identity()};
  std::vector<WeylElement> frontier{identity()};
  for (std::size_t len = 1; len <= L && !frontier.empty(); ++len) {
    std::map<CorootVector, WeylElement> next;
    for (const auto& w : frontier)
      for (std::size_t i = 0; i < rank(); ++i) {
        if (!has_left_ascent(w, i)) continue;
        auto u = apply_generator(w, i);
        auto [it, fresh] = next.emplace(u.offset_, u);
        if (!fresh && (it->second.m_ != u.m_ || it->second.b_ != u.b_))
          throw std::logic_error("normal form collision between distinct Weyl elements");
      }
    frontier.clear();
    for (auto& [key, w] : next) frontier.push_back(w);
    out.insert(out.end(), frontier.begin(), frontier.end());
  }
  std::stable_sort(out.begin(), out.end(), by_length);
  return out;
}

std::vector<WeylElement> WeylGroup::finite_elements() const {
  if (!classify(a_).finite()) throw Error(Errc::NotFiniteType, "Weyl group is infinite");
  // a finite Weyl group has length at most the number of positive roots
  auto n = finite_positive_roots(a_).size();
  return ball(n);
}

CorootVector WeylGroup::base_offset(const WeylElement& w, const std::vector<std::int64_t>& n) const {
  if (n.size() != rank()) throw Error(Errc::MismatchedBase, "pairing vector has wrong rank");
  return CorootVector(mat_vec(w.b_, rank(), n));
}

CorootVector WeylGroup::act_on_coroot(const WeylElement& w, const CorootVector& beta) const {
  return CorootVector(mat_vec(w.m_, rank(), beta.vec()));
}

Exponent WeylGroup::act_on_exponent(const WeylElement& w, const Exponent& e) const {
  // w(lambda - beta) = lambda - B n - w(beta)
  return Exponent{e.base, base_offset(w, e.base.pairings) + act_on_coroot(w, e.offset)};
}

std::vector<CorootVector> WeylGroup::inversion_coroots(const WeylElement& w) const {
  std::vector<CorootVector> out;
  WeylElement prefix = identity();
  for (std::size_t k = 0; k < w.word_.size(); ++k) {
    auto i = w.word_[k];
    out.push_back(act_on_coroot(prefix, CorootVector::unit(rank(), i)));
    prefix = from_word(std::vector<std::size_t>(w.word_.begin(), w.word_.begin() + static_cast<std::ptrdiff_t>(k) + 1));
  }
  return out;
}

VPoly WeylGroup::stabilizer_poincare(const BaseCoweight& lambda) const {
  if (lambda.rank() != rank()) throw Error(Errc::MismatchedBase, "pairing vector has wrong rank");
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < rank(); ++i)
    if (lambda.pairings[i] == 0) zeros.push_back(i);
  if (zeros.empty()) return VPoly(1);
  auto sub = a_.principal_submatrix(zeros);
  if (!classify(sub).finite())
    throw Error(Errc::InfiniteStabilizer, "stabilizer parabolic is not of finite type");
  WeylGroup parabolic(sub);
  VPoly p;
  for (const auto& s : parabolic.finite_elements()) p += VPoly::monomial(1, static_cast<std::int64_t>(s.length()));
  return p;
}

std::vector<WeylElement> WeylGroup::omega_filter(const BaseCoweight& lambda, const CorootVector& mu_offset) const {
  if (lambda.rank() != rank() || mu_offset.rank() != rank())
    throw Error(Errc::MismatchedBase, "rank mismatch in omega_filter");
  if (!mu_offset.is_nonnegative())
    throw Error(Errc::OffsetNotDominatedBy, "offset " + mu_offset.str() + " is not in Q^vee_+");
  return ball(static_cast<std::size_t>(2 * mu_offset.height()));
}

}  // namespace kms
