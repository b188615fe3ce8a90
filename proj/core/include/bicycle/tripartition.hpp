#pragma once

// The canonical tripartition (F₋₁, F₀, F₁): e ∈ F_i iff contracting e
// changes the bicycle dimension by i.

#include <array>
#include <cstddef>

#include "bicycle/gf2.hpp"
#include "bicycle/qform.hpp"
#include "bicycle/subspace.hpp"

namespace bicycle {

struct Tripartition {
  BitVector minus;  // F₋₁
  BitVector zero;   // F₀
  BitVector plus;   // F₁

  /// (|F₋₁|, |F₀|, |F₁|)
  std::array<std::size_t, 3> sizes() const {
    return {minus.count(), zero.count(), plus.count()};
  }

  friend bool operator==(const Tripartition&, const Tripartition&) = default;
};

/// Recomputes d(V/e) for every e. Throws InvariantError if some contraction
/// changes d by anything other than -1, 0 or +1.
Tripartition tripartition_oracle(const Subspace& v);

/// Reads the tripartition off a q-basis of V in O(dim(V)·|E|):
///   F₋₁ = union of the bicycle supports,
///   loops of M(V) go to F₀,
///   F₁ = supp(Σ free vectors) ∖ F₋₁ when the free part is orthogonal,
///        empty otherwise,
///   F₀ = the rest.
/// Throws InputError if `qb` is not a valid q-basis of `v`.
Tripartition tripartition_fast(const QBasis& qb, const Subspace& v);

Tripartition tripartition(const Subspace& v);

}  // namespace bicycle
