#pragma once

// Orthogonal projection onto pedestrian spaces and its support graph.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bicycle/gf2.hpp"
#include "bicycle/qform.hpp"
#include "bicycle/subspace.hpp"

namespace bicycle {

/// Square matrix over GF(2) indexed by `domain` (coordinates of E, increasing)
/// on both sides.
struct Projector {
  BitMatrix matrix;
  std::vector<std::size_t> domain;

  friend bool operator==(const Projector&, const Projector&) = default;
};

/// Q_V for pedestrian V, built from the q-basis as Σ v_i v_iᵀ (orthogonal)
/// or Σ v_i v_{i+m}ᵀ + v_{i+m} v_iᵀ (alternating).
/// Throws InputError if the q-basis has a bicycle part.
Projector projector(const QBasis& qb);

/// Q_Ṽ on all of E for the free part Ṽ of any q-basis.
Projector free_part_projector(const QBasis& qb);

/// Q[F, F] for the coordinates in `subset` (an indicator over Q's domain labels).
Projector restrict(const Projector& q, const BitVector& subset);

/// Support graph of a symmetric matrix. Off-diagonal ones are edges and
/// diagonal ones are per-vertex loop flags.
struct SupportGraph {
  std::vector<std::size_t> vertices;  // coordinate labels, increasing
  std::vector<BitVector> adjacency;   // by local index, zero diagonal
  BitVector loops;                    // by local index

  std::size_t order() const noexcept { return vertices.size(); }
  std::size_t edge_count() const noexcept;
  std::size_t loop_count() const noexcept { return loops.count(); }
  bool has_edge(std::size_t i, std::size_t j) const noexcept { return adjacency[i].test(j); }

  friend bool operator==(const SupportGraph&, const SupportGraph&) = default;
};

/// Throws InputError if the matrix is not symmetric.
SupportGraph support_graph(const Projector& q);

/// G̃_V: support graph of Q_Ṽ[F, F] with F = E ∖ F₋₁. Equals G_V when V is
/// pedestrian and does not depend on the chosen complement Ṽ.
SupportGraph reduced_graph(const QBasis& qb);
SupportGraph reduced_graph(const Subspace& v);

/// Subgraph induced by the vertices whose labels are set in `coordinates`.
SupportGraph induced_subgraph(const SupportGraph& g, const BitVector& coordinates);

/// Image of `g` under the coordinate map label ↦ perm[label].
SupportGraph relabel(const SupportGraph& g, std::span<const std::size_t> perm);

inline constexpr std::size_t kDefaultGraphIsoCap = 24;

/// True iff some bijection of vertices preserves edges and loop flags.
/// Colour refinement settles most pairs outright; otherwise a backtracking
/// search runs, but only for graphs of order ≤ cap. Throws UndecidedError
/// when the search would be needed above the cap.
bool graph_iso(const SupportGraph& g, const SupportGraph& h,
               std::size_t cap = kDefaultGraphIsoCap);

/// graph6 encoding of the simple part of `g` (loops are ignored).
std::string export_graph6(const SupportGraph& g);

/// "L:" followed by one 0/1 character per vertex.
std::string export_loop_line(const SupportGraph& g);

}  // namespace bicycle
