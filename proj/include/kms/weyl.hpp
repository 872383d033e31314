#pragma once

#include <cstdint>
#include <vector>

#include "kms/coweight.hpp"
#include "kms/lattice.hpp"
#include "kms/root_datum.hpp"
#include "kms/vpoly.hpp"

namespace kms {

/// Element of the Weyl group W(A), acting on coweights.
///
/// The word is reduced and read left to right: w = s_{word[0]} s_{word[1]} ...
/// The normal form is the offset beta(w) with w(lambda_ref) = lambda_ref - beta(w)
/// for the reference pairing vector (1,...,1); since a regular coweight has
/// trivial stabilizer, beta(w) determines w.
class WeylElement {
 public:
  const std::vector<std::size_t>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  const CorootVector& normal_form() const noexcept { return offset_; }
  bool is_identity() const noexcept { return word_.empty(); }

  /// Column j is w(alpha_j^vee) in the simple-coroot basis.
  const std::vector<std::int64_t>& coroot_matrix() const noexcept { return m_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.offset_ == b.offset_; }

 private:
  friend class WeylGroup;

  std::vector<std::size_t> word_;
  CorootVector offset_;
  std::vector<std::int64_t> m_;  // row-major l x l, action on Q^vee
  std::vector<std::int64_t> b_;  // row-major l x l, w(lambda) = lambda - B n
};

class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix gcm);

  const CartanMatrix& cartan() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.rank(); }

  WeylElement identity() const;

  /// s_i * w, with length +-1 decided by the sign of <alpha_i, w(lambda_ref)>.
  WeylElement apply_generator(const WeylElement& w, std::size_t i) const;

  /// True when l(s_i w) = l(w) + 1.
  bool has_left_ascent(const WeylElement& w, std::size_t i) const;

  /// s_{word[0]} ... s_{word[k-1]}. Throws NonReducedWord when the word is not
  /// reduced and `require_reduced` is set.
  WeylElement from_word(const std::vector<std::size_t>& word, bool require_reduced = true) const;

  WeylElement inverse(const WeylElement& w) const;
  WeylElement multiply(const WeylElement& x, const WeylElement& y) const;

  /// All elements with l(w) <= L, ordered by length then normal form.
  std::vector<WeylElement> ball(std::size_t L) const;

  /// The whole group when it is finite; throws InfiniteStabilizer-style
  /// NotFiniteType otherwise.
  std::vector<WeylElement> finite_elements() const;

  /// w(lambda^vee - offset).
  Exponent act_on_exponent(const WeylElement& w, const Exponent& e) const;
  /// w(beta^vee) for beta^vee in Q^vee.
  CorootVector act_on_coroot(const WeylElement& w, const CorootVector& beta) const;
  /// The offset lambda^vee - w(lambda^vee) for a base with pairings n.
  CorootVector base_offset(const WeylElement& w, const std::vector<std::int64_t>& n) const;

  /// {gamma^vee > 0 : w^{-1} gamma^vee < 0}, of size l(w).
  std::vector<CorootVector> inversion_coroots(const WeylElement& w) const;

  /// Sum over the stabilizer parabolic of v^{l(sigma)} (v standing for q^{-1}).
  VPoly stabilizer_poincare(const BaseCoweight& lambda) const;

  /// Candidate Iwahori-contributing set: ball(2 * height(mu_offset)).
  std::vector<WeylElement> omega_filter(const BaseCoweight& lambda, const CorootVector& mu_offset) const;

 private:
  CartanMatrix a_;
};

}  // namespace kms
