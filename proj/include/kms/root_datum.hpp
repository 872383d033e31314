#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kms/coweight.hpp"
#include "kms/lattice.hpp"
#include "kms/numeric.hpp"

namespace kms {

/// Generalized Cartan matrix with the convention a_ij = <alpha_i^vee, alpha_j>.
class CartanMatrix {
 public:
  /// Checks a_ii = 2, a_ij <= 0 off the diagonal and a_ij = 0 <=> a_ji = 0.
  static CartanMatrix validate(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * rank_ + j]; }

  CartanMatrix transpose() const;
  CartanMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  std::vector<std::vector<std::int64_t>> rows() const;

  /// <beta, alpha_i^vee> for beta in the root lattice.
  std::int64_t root_pairing(const RootVector& beta, std::size_t i) const;
  /// <alpha_i, beta^vee> for beta^vee in the coroot lattice.
  std::int64_t coroot_pairing(std::size_t i, const CorootVector& beta) const;
  /// <alpha_i, lambda^vee - offset>.
  std::int64_t exponent_pairing(std::size_t i, const std::vector<std::int64_t>& base_pairings,
                                const CorootVector& offset) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  CartanMatrix(std::size_t rank, std::vector<std::int64_t> a) : rank_(rank), a_(std::move(a)) {}

  std::size_t rank_ = 0;
  std::vector<std::int64_t> a_;
};

enum class Kind { Finite, Affine, Indefinite };
std::string kind_name(Kind k);

struct Block {
  std::vector<std::size_t> indices;
  Kind kind;
  BigInt determinant;
};

struct Classification {
  std::vector<Block> blocks;

  bool all(Kind k) const;
  bool finite() const { return all(Kind::Finite); }
};

/// Splits into connected components of {i ~ j : a_ij != 0} and classifies each
/// block from its exact principal minors.
Classification classify(const CartanMatrix& gcm);

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const CartanMatrix& gcm);

/// Positive rationals eps_i with eps_i a_ij = eps_j a_ji, normalized to 1 on the
/// first index of each block; nullopt when no such vector exists.
std::optional<std::vector<Rational>> symmetrizer(const CartanMatrix& gcm);

struct RootEntry {
  LatticeVec root;
  std::int64_t mult = 1;
  bool real = true;
};

/// Positive roots (and, on the dual side, positive coroots) of height <= H.
struct RootTable {
  std::int64_t height_bound = 0;
  std::vector<RootEntry> roots;
  std::vector<RootEntry> coroots;

  /// Multiplicity of a positive coroot, 0 if not a coroot. Throws
  /// TableTooShallow when the height exceeds the bound.
  std::int64_t coroot_mult(const CorootVector& c) const;
  std::int64_t root_mult(const RootVector& r) const;
};

/// Positive roots of height <= H for `gcm`, sorted by (height, coefficients).
/// Real roots come from reflecting simple roots inside the height bound;
/// imaginary multiplicities come from the Peterson recursion.
std::vector<RootEntry> positive_roots(const CartanMatrix& gcm, std::int64_t H);

/// Root table for roots of A and coroots (= roots of A^T).
RootTable roots_up_to_height(const CartanMatrix& gcm, std::int64_t H);

/// All positive real roots of a finite-type GCM (the full, finite root system).
std::vector<RootVector> finite_positive_roots(const CartanMatrix& gcm);

/// Peterson coefficients: root multiplicities m(beta) for every beta in Q_+ of
/// height in [1, H] (zero entries omitted).
std::map<LatticeVec, std::int64_t> peterson_multiplicities(const CartanMatrix& gcm, std::int64_t H);

/// Validated GCM together with labels and its classification.
struct RootDatum {
  CartanMatrix cartan;
  std::vector<std::string> labels;
  Classification classification;

  static RootDatum from_matrix(const std::vector<std::vector<std::int64_t>>& rows,
                               std::vector<std::string> labels = {});

  std::size_t rank() const noexcept { return cartan.rank(); }
};

/// mu <= lambda in the dominance order (offset difference in Q^vee_+).
bool dominance_leq(const Exponent& mu, const Exponent& lambda);

}  // namespace kms
