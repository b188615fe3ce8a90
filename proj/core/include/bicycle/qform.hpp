#pragma once

// The ℤ/4ℤ-valued quadratic form q(x) = |supp(x)| mod 4 on a binary space,
// its structured bases and Brown's invariant.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bicycle/gaussian.hpp"
#include "bicycle/subspace.hpp"

namespace bicycle {

enum class FormKind { empty, orthogonal, alternating };

const char* to_string(FormKind kind) noexcept;

/// A basis v_1..v_k of V laid out as
///   free part   v_1..v_{k-d}: orthogonal (Gram = I) or alternating
///               (Gram pairs i with i+m, m = (k-d)/2), spanning a
///               complement Ṽ of V ∩ V⊥;
///   bicycle part v_{k-d+1}..v_k: a basis of V ∩ V⊥ whose q-values are all 0
///               except possibly the last.
struct QBasis {
  std::size_t ground_size = 0;
  std::vector<BitVector> vectors;
  FormKind kind = FormKind::empty;
  std::size_t bicycle_dim = 0;
  std::vector<unsigned> q_values;

  std::size_t dim() const noexcept { return vectors.size(); }
  std::size_t free_dim() const noexcept { return vectors.size() - bicycle_dim; }
  /// m, the number of hyperbolic pairs in an alternating free part.
  std::size_t half() const noexcept { return free_dim() / 2; }

  std::span<const BitVector> free_part() const noexcept {
    return std::span<const BitVector>(vectors).first(free_dim());
  }
  std::span<const BitVector> bicycle_part() const noexcept {
    return std::span<const BitVector>(vectors).subspan(free_dim());
  }
};

QBasis compute_q_basis(const Subspace& v);

/// Same contract, but the input basis is scrambled and the complement Ṽ is
/// shifted by random bicycle vectors, so different seeds usually give
/// different (equally valid) q-bases.
QBasis compute_q_basis(const Subspace& v, std::uint64_t seed);

/// Throws InvariantError unless `qb` satisfies every structural condition
/// of a q-basis (Gram pattern, q-values and their parities, independence).
void validate(const QBasis& qb);

/// True iff q vanishes on all of V ∩ V⊥.
bool bicycle_q_vanishes(const QBasis& qb) noexcept;

/// Brown's invariant σ(q̃) ∈ ℤ/8ℤ of the form induced on V/(V ∩ V⊥).
/// Throws UndefinedInvariantError if q does not vanish on V ∩ V⊥.
unsigned brown_sigma(const QBasis& qb);

inline constexpr std::size_t kDefaultBrownCap = 24;

/// Σ_{x∈V} ι^{q(x)} by enumerating all 2^dim(V) vectors.
/// Throws CapError if dim(V) > cap.
GaussianInteger brown_sum_oracle(const Subspace& v, std::size_t cap = kDefaultBrownCap);

}  // namespace bicycle
