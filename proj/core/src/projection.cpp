#include "bicycle/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

void add_outer(BitMatrix& q, const BitVector& left, const BitVector& right) {
  for (std::size_t e = left.find_first(); e < left.size(); e = left.find_next(e + 1)) {
    q.row(e) ^= right;
  }
}

// ---- colour refinement over the disjoint union of two graphs ----

using Colouring = std::vector<std::size_t>;

struct Pair {
  const SupportGraph& g;
  const SupportGraph& h;
  std::size_t n;

  const SupportGraph& graph(std::size_t side) const { return side == 0 ? g : h; }
};

/// Refines both colourings with one shared naming until stable. Returns the
/// number of colours.
std::size_t refine(const Pair& p, Colouring& cg, Colouring& ch) {
  std::size_t classes = 0;
  {
    std::vector<std::size_t> all(cg);
    all.insert(all.end(), ch.begin(), ch.end());
    std::sort(all.begin(), all.end());
    classes = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sigs[2];
    for (std::size_t side = 0; side < 2; ++side) {
      const SupportGraph& graph = p.graph(side);
      const Colouring& c = side == 0 ? cg : ch;
      sigs[side].resize(p.n);
      for (std::size_t v = 0; v < p.n; ++v) {
        std::vector<std::size_t> around;
        const BitVector& adj = graph.adjacency[v];
        for (std::size_t u = adj.find_first(); u < p.n; u = adj.find_next(u + 1)) {
          around.push_back(c[u]);
        }
        std::sort(around.begin(), around.end());
        sigs[side][v] = {c[v], std::move(around)};
      }
    }
    std::map<Signature, std::size_t> names;
    for (const auto& side : sigs) {
      for (const auto& s : side) names.emplace(s, 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : names) id = next++;
    for (std::size_t v = 0; v < p.n; ++v) {
      cg[v] = names.at(sigs[0][v]);
      ch[v] = names.at(sigs[1][v]);
    }
    if (names.size() == classes) return classes;
    classes = names.size();
  }
}

bool same_histogram(const Colouring& cg, const Colouring& ch) {
  Colouring a = cg;
  Colouring b = ch;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_isomorphism(const Pair& p, const std::vector<std::size_t>& phi) {
  for (std::size_t v = 0; v < p.n; ++v) {
    if (p.g.loops.test(v) != p.h.loops.test(phi[v])) return false;
    for (std::size_t u = v + 1; u < p.n; ++u) {
      if (p.g.has_edge(v, u) != p.h.has_edge(phi[v], phi[u])) return false;
    }
  }
  return true;
}

/// Requires equitable colourings with equal histograms.
bool search(const Pair& p, const Colouring& cg, const Colouring& ch) {
  std::vector<std::size_t> cell_size(p.n * 2 + 2, 0);
  for (std::size_t c : cg) {
    if (c >= cell_size.size()) cell_size.resize(c + 1, 0);
    ++cell_size[c];
  }
  // Target: first vertex of the smallest non-singleton cell.
  std::size_t target = p.n;
  for (std::size_t v = 0; v < p.n; ++v) {
    if (cell_size[cg[v]] > 1 && (target == p.n || cell_size[cg[v]] < cell_size[cg[target]])) {
      target = v;
    }
  }
  if (target == p.n) {
    std::vector<std::size_t> phi(p.n);
    std::vector<std::size_t> by_colour(cell_size.size(), p.n);
    for (std::size_t w = 0; w < p.n; ++w) by_colour[ch[w]] = w;
    for (std::size_t v = 0; v < p.n; ++v) phi[v] = by_colour[cg[v]];
    return is_isomorphism(p, phi);
  }

  const std::size_t fresh = *std::max_element(cg.begin(), cg.end()) + 1;
  for (std::size_t w = 0; w < p.n; ++w) {
    if (ch[w] != cg[target]) continue;
    Colouring ng = cg;
    Colouring nh = ch;
    ng[target] = fresh;
    nh[w] = fresh;
    refine(p, ng, nh);
    if (same_histogram(ng, nh) && search(p, ng, nh)) return true;
  }
  return false;
}

}  // namespace

Projector free_part_projector(const QBasis& qb) {
  const std::size_t n = qb.ground_size;
  Projector out{BitMatrix(n, n), std::vector<std::size_t>(n)};
  std::iota(out.domain.begin(), out.domain.end(), std::size_t{0});
  const auto free = qb.free_part();
  if (qb.kind == FormKind::orthogonal) {
    for (const auto& v : free) add_outer(out.matrix, v, v);
  } else if (qb.kind == FormKind::alternating) {
    const std::size_t m = qb.half();
    for (std::size_t i = 0; i < m; ++i) {
      add_outer(out.matrix, free[i], free[i + m]);
      add_outer(out.matrix, free[i + m], free[i]);
    }
  }
  return out;
}

Projector projector(const QBasis& qb) {
  if (qb.bicycle_dim != 0) {
    throw InputError("projector: subspace is not pedestrian (bicycle dimension " +
                     std::to_string(qb.bicycle_dim) + ")");
  }
  return free_part_projector(qb);
}

Projector restrict(const Projector& q, const BitVector& subset) {
  std::vector<std::size_t> local;
  for (std::size_t i = 0; i < q.domain.size(); ++i) {
    if (subset.test(q.domain[i])) local.push_back(i);
  }
  Projector out{BitMatrix(local.size(), local.size()), {}};
  for (std::size_t a = 0; a < local.size(); ++a) {
    out.domain.push_back(q.domain[local[a]]);
    for (std::size_t b = 0; b < local.size(); ++b) {
      if (q.matrix(local[a], local[b])) out.matrix.set(a, b);
    }
  }
  return out;
}

std::size_t SupportGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

SupportGraph support_graph(const Projector& q) {
  if (!q.matrix.is_symmetric()) throw InputError("support_graph: matrix is not symmetric");
  const std::size_t n = q.domain.size();
  SupportGraph g{q.domain, q.matrix.row_vectors(), BitVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    g.loops.set(i, g.adjacency[i].test(i));
    g.adjacency[i].set(i, false);
  }
  return g;
}

SupportGraph reduced_graph(const QBasis& qb) {
  BitVector outside_bicycles = BitVector::ones(qb.ground_size);
  for (const auto& b : qb.bicycle_part()) outside_bicycles &= ~b;
  return support_graph(restrict(free_part_projector(qb), outside_bicycles));
}

SupportGraph reduced_graph(const Subspace& v) { return reduced_graph(compute_q_basis(v)); }

SupportGraph induced_subgraph(const SupportGraph& g, const BitVector& coordinates) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coordinates.test(g.vertices[i])) keep.push_back(i);
  }
  SupportGraph out{{}, {}, BitVector(keep.size())};
  for (std::size_t a = 0; a < keep.size(); ++a) {
    out.vertices.push_back(g.vertices[keep[a]]);
    out.loops.set(a, g.loops.test(keep[a]));
    BitVector row(keep.size());
    for (std::size_t b = 0; b < keep.size(); ++b) row.set(b, g.has_edge(keep[a], keep[b]));
    out.adjacency.push_back(std::move(row));
  }
  return out;
}

SupportGraph relabel(const SupportGraph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t label : g.vertices) {
    if (label >= perm.size()) throw InputError("relabel: permutation too short");
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return perm[g.vertices[a]] < perm[g.vertices[b]];
  });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  SupportGraph out{std::vector<std::size_t>(n), std::vector<BitVector>(n, BitVector(n)),
                   BitVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t at = position[i];
    out.vertices[at] = perm[g.vertices[i]];
    out.loops.set(at, g.loops.test(i));
    const BitVector& adj = g.adjacency[i];
    for (std::size_t j = adj.find_first(); j < n; j = adj.find_next(j + 1)) {
      out.adjacency[at].set(position[j]);
    }
  }
  return out;
}

bool graph_iso(const SupportGraph& g, const SupportGraph& h, std::size_t cap) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      g.loop_count() != h.loop_count()) {
    return false;
  }
  const Pair p{g, h, g.order()};
  Colouring cg(p.n);
  Colouring ch(p.n);
  for (std::size_t v = 0; v < p.n; ++v) {
    cg[v] = g.loops.test(v) ? 1 : 0;
    ch[v] = h.loops.test(v) ? 1 : 0;
  }
  const std::size_t classes = refine(p, cg, ch);
  if (!same_histogram(cg, ch)) return false;
  // A discrete colouring leaves a single candidate bijection.
  if (classes < p.n && p.n > cap) {
    throw UndecidedError("graph_iso: colour refinement leaves " + std::to_string(classes) +
                         " cells on " + std::to_string(p.n) + " vertices, above the search cap " +
                         std::to_string(cap));
  }
  return search(p, cg, ch);
}

std::string export_graph6(const SupportGraph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63u)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63u)));
    }
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  unsigned group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

std::string export_loop_line(const SupportGraph& g) { return "L:" + g.loops.to_string(); }

}  // namespace bicycle
