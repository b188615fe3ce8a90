#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bicycle/gf2.hpp"

namespace bicycle {

/// A linear subspace V of GF(2)^E, E = {0, ..., n-1}, stored by its reduced
/// row echelon basis. Two values compare equal iff they are the same space.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of `rows`.
  static Subspace from_rows(const BitMatrix& rows);
  /// Throws InputError if some vector does not have `ground_size` entries.
  static Subspace span(std::size_t ground_size, std::span<const BitVector> vectors);
  static Subspace zero(std::size_t ground_size);
  static Subspace full(std::size_t ground_size);

  std::size_t ground_size() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }

  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const BitVector& v) const;
  /// Coefficients c with v = Σ c_i basis_i; only meaningful when contains(v).
  BitVector coordinates(const BitVector& v) const;

  /// True iff the unit vector at e lies in V, i.e. e is a loop of M(V).
  bool is_loop(std::size_t e) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(RowEchelon echelon)
      : basis_(std::move(echelon.reduced)), pivots_(std::move(echelon.pivots)) {}

  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// V⊥.
Subspace dual(const Subspace& v);

struct BicycleSpace {
  Subspace space;          // V ∩ V⊥
  std::size_t dimension;   // d(V)
};

BicycleSpace bicycle(const Subspace& v);

/// d(V) = dim(V) - rank(A Aᵀ) for any basis matrix A of V.
std::size_t bicycle_dimension(const Subspace& v);

/// V/e: coordinate e deleted from every vector, later coordinates shift down.
Subspace contract(const Subspace& v, std::size_t e);

/// |supp(x)| mod 4.
inline unsigned q_weight(const BitVector& x) noexcept {
  return static_cast<unsigned>(x.count() & 3u);
}

/// Rank of F (given by its indicator vector) in M(V).
std::size_t matroid_rank(const Subspace& v, const BitVector& subset);

/// {w : w[perm[i]] = v[i]}; throws InputError unless perm is a bijection
/// of the ground set.
Subspace permute(const Subspace& v, std::span<const std::size_t> perm);

/// Uniform k-dimensional subspace by rejection sampling of k×n matrices.
/// Fixed (n, k, seed) always gives the same space.
Subspace random_subspace(std::size_t n, std::size_t k, std::uint64_t seed);

/// Every subspace of GF(2)^n, enumerated by echelon shape.
std::vector<Subspace> all_subspaces(std::size_t n);
/// Every k-dimensional subspace of GF(2)^n.
std::vector<Subspace> all_subspaces(std::size_t n, std::size_t k);

/// Deterministic 64-bit seed mixer (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace bicycle
