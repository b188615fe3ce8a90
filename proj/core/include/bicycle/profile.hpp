#pragma once

// Isomorphism invariants of binary matroids and the prefilter built on them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "bicycle/projection.hpp"
#include "bicycle/qform.hpp"
#include "bicycle/subspace.hpp"
#include "bicycle/tripartition.hpp"
#include "bicycle/tutte.hpp"

namespace bicycle {

/// Everything the invariants are computed from, sharing one q-basis.
struct Analysis {
  QBasis qbasis;
  TutteEvaluation tutte;
  Tripartition tripartition;
  SupportGraph reduced;  // G̃_V
};

Analysis analyze(const Subspace& v);

/// The invariant bundle. Index order in the arrays:
///   tripartition_sizes: |F₋₁|, |F₀|, |F₁|
///   edge_counts / loop_counts: G̃_V, G̃[F₀], G̃[F₁]
struct InvariantProfile {
  TuttePointValue tutte = TuttePointValue::zero();
  std::array<std::size_t, 3> tripartition_sizes{};
  std::array<std::size_t, 3> edge_counts{};
  std::array<std::size_t, 3> loop_counts{};
  std::size_t ground_size = 0;
  std::size_t dim = 0;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;

  /// FNV-1a over the little-endian 64-bit encodings of, in order:
  /// ground_size, dim, tutte zero flag, tutte d, tutte octant, the three
  /// tripartition sizes, the three edge counts, the three loop counts.
  /// Equal profiles have equal digests; the converse is not guaranteed.
  std::uint64_t digest() const noexcept;

  /// Stable "key: value" lines.
  std::string to_text() const;
};

InvariantProfile profile(const Analysis& a);
InvariantProfile profile(const Subspace& v);

enum class Verdict { DistinctCertain, IsomorphicCertain, Unknown };

const char* to_string(Verdict v) noexcept;

struct PrefilterResult {
  Verdict verdict = Verdict::Unknown;
  /// What decided it, e.g. "tutte", "tripartition_sizes", "reduced_graph".
  std::string reason;
};

PrefilterResult prefilter(const Analysis& a, const Analysis& b,
                          std::size_t graph_cap = kDefaultGraphIsoCap);
/// Equal subspaces are reported IsomorphicCertain ("identical") up front.
PrefilterResult prefilter(const Subspace& v, const Subspace& w,
                          std::size_t graph_cap = kDefaultGraphIsoCap);

inline constexpr std::size_t kDefaultMatroidIsoCap = 10;

/// Exhaustive search for a coordinate permutation mapping V onto W. Binary
/// matroids are uniquely representable, so this decides M(V) ≅ M(W).
/// Throws CapError above `cap` elements.
bool brute_matroid_iso(const Subspace& v, const Subspace& w,
                       std::size_t cap = kDefaultMatroidIsoCap);

struct Census {
  std::size_t down = 0;  // d(V) = d(W) - 1
  std::size_t same = 0;  // d(V) = d(W)
  std::size_t up = 0;    // d(V) = d(W) + 1

  friend bool operator==(const Census&, const Census&) = default;
};

inline constexpr std::size_t kDefaultCensusCap = 16;

/// Tallies d(V) - d(W) over the 2^dim(W) spaces V ⊆ GF(2)^{E+e} with
/// dim V = dim W and V/e = W (e is appended as the last coordinate).
/// Throws CapError if dim(W) > cap.
Census extension_census(const Subspace& w, std::size_t cap = kDefaultCensusCap);

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;

  double value() const noexcept {
    return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

/// Share of `samples` random k-dimensional subspaces of GF(2)^n that are
/// pedestrian. Sample i uses random_subspace(n, k, mix_seed(seed, i)).
Fraction pedestrian_fraction(std::size_t n, std::size_t k, std::size_t samples, std::uint64_t seed);

/// Same share over all k-dimensional subspaces of GF(2)^n.
Fraction pedestrian_fraction_exhaustive(std::size_t n, std::size_t k);

struct ExperimentReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Fraction pedestrian;
  std::uint64_t pairs = 0;
  std::uint64_t resolved_by_invariants = 0;   // profiles differ
  std::uint64_t resolved_by_graphs = 0;       // equal profiles, graph test decides
  std::uint64_t isomorphic_pairs = 0;         // among resolved_by_graphs
  std::uint64_t unknown = 0;
  std::size_t profile_buckets = 0;

  double resolved_share() const noexcept {
    return pairs == 0 ? 1.0
                      : static_cast<double>(resolved_by_invariants + resolved_by_graphs) /
                            static_cast<double>(pairs);
  }
};

/// Samples `samples` spaces as in pedestrian_fraction and runs the prefilter
/// on every pair.
ExperimentReport run_experiment(std::size_t n, std::size_t k, std::size_t samples,
                                std::uint64_t seed, std::size_t graph_cap = kDefaultGraphIsoCap);

/// The same report over a given list of spaces (seed and k are left 0).
ExperimentReport run_experiment(const std::vector<Subspace>& spaces,
                                std::size_t graph_cap = kDefaultGraphIsoCap);

}  // namespace bicycle
