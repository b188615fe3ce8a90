#include "bicycle/profile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bicycle/errors.hpp"

namespace bicycle {

Analysis analyze(const Subspace& v) {
  Analysis a;
  a.qbasis = compute_q_basis(v);
  a.tutte = evaluate_detailed(a.qbasis);
  a.tripartition = tripartition_fast(a.qbasis, v);
  a.reduced = reduced_graph(a.qbasis);
  return a;
}

InvariantProfile profile(const Analysis& a) {
  InvariantProfile p;
  p.tutte = a.tutte.value;
  p.tripartition_sizes = a.tripartition.sizes();
  p.ground_size = a.qbasis.ground_size;
  p.dim = a.qbasis.dim();
  const SupportGraph on_zero = induced_subgraph(a.reduced, a.tripartition.zero);
  const SupportGraph on_plus = induced_subgraph(a.reduced, a.tripartition.plus);
  p.edge_counts = {a.reduced.edge_count(), on_zero.edge_count(), on_plus.edge_count()};
  p.loop_counts = {a.reduced.loop_count(), on_zero.loop_count(), on_plus.loop_count()};
  return p;
}

InvariantProfile profile(const Subspace& v) { return profile(analyze(v)); }

std::uint64_t InvariantProfile::digest() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](std::uint64_t x) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (x >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  feed(ground_size);
  feed(dim);
  feed(tutte.is_zero() ? 1 : 0);
  feed(tutte.sqrt2_power());
  feed(tutte.octant());
  for (auto x : tripartition_sizes) feed(x);
  for (auto x : edge_counts) feed(x);
  for (auto x : loop_counts) feed(x);
  return h;
}

std::string InvariantProfile::to_text() const {
  auto triple = [](const std::array<std::size_t, 3>& t) {
    return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
  };
  std::ostringstream out;
  out << "ground_size: " << ground_size << '\n'
      << "dim: " << dim << '\n'
      << "tutte: " << tutte.to_string() << '\n'
      << "tripartition_sizes: " << triple(tripartition_sizes) << '\n'
      << "edge_counts: " << triple(edge_counts) << '\n'
      << "loop_counts: " << triple(loop_counts) << '\n'
      << "digest: " << std::hex << digest() << '\n';
  return out.str();
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::DistinctCertain: return "DistinctCertain";
    case Verdict::IsomorphicCertain: return "IsomorphicCertain";
    case Verdict::Unknown: break;
  }
  return "Unknown";
}

PrefilterResult prefilter(const Analysis& a, const Analysis& b, std::size_t graph_cap) {
  const InvariantProfile pa = profile(a);
  const InvariantProfile pb = profile(b);
  if (pa.ground_size != pb.ground_size) return {Verdict::DistinctCertain, "ground_size"};
  if (pa.dim != pb.dim) return {Verdict::DistinctCertain, "dim"};
  if (pa.tutte != pb.tutte) return {Verdict::DistinctCertain, "tutte"};
  if (pa.tripartition_sizes != pb.tripartition_sizes) {
    return {Verdict::DistinctCertain, "tripartition_sizes"};
  }
  if (pa.edge_counts != pb.edge_counts) return {Verdict::DistinctCertain, "edge_counts"};
  if (pa.loop_counts != pb.loop_counts) return {Verdict::DistinctCertain, "loop_counts"};

  bool graphs_match = false;
  try {
    graphs_match = graph_iso(a.reduced, b.reduced, graph_cap);
  } catch (const UndecidedError&) {
    return {Verdict::Unknown, "reduced_graph_undecided"};
  }
  if (!graphs_match) return {Verdict::DistinctCertain, "reduced_graph"};
  if (a.qbasis.bicycle_dim == 0 && b.qbasis.bicycle_dim == 0) {
    return {Verdict::IsomorphicCertain, "projection_graph"};
  }
  return {Verdict::Unknown, "not_pedestrian"};
}

PrefilterResult prefilter(const Subspace& v, const Subspace& w, std::size_t graph_cap) {
  if (v == w) return {Verdict::IsomorphicCertain, "identical"};
  return prefilter(analyze(v), analyze(w), graph_cap);
}

bool brute_matroid_iso(const Subspace& v, const Subspace& w, std::size_t cap) {
  if (v.ground_size() != w.ground_size() || v.dim() != w.dim()) return false;
  const std::size_t n = v.ground_size();
  if (n > cap) throw CapError("brute_matroid_iso", n, cap);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    if (permute(v, perm) == w) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Census extension_census(const Subspace& w, std::size_t cap) {
  const std::size_t k = w.dim();
  if (k > cap) throw CapError("extension_census", k, cap);
  // Lifting basis row i by the bit c_i adds c cᵀ to the Gram matrix.
  const BitMatrix g = gram(w.basis());
  const long long base = static_cast<long long>(k - rank(g));
  Census census;
  const std::uint64_t lifts = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < lifts; ++mask) {
    BitMatrix updated = g;
    for (std::size_t i = 0; i < k; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if ((mask >> j) & 1u) updated.row(i).flip(j);
      }
    }
    const long long change = static_cast<long long>(k - rank(updated)) - base;
    switch (change) {
      case -1: ++census.down; break;
      case 0: ++census.same; break;
      case 1: ++census.up; break;
      default:
        throw InvariantError("extension_census: bicycle dimension changed by " +
                             std::to_string(change));
    }
  }
  return census;
}

Fraction pedestrian_fraction(std::size_t n, std::size_t k, std::size_t samples, std::uint64_t seed) {
  Fraction f{0, samples};
  for (std::size_t i = 0; i < samples; ++i) {
    if (bicycle_dimension(random_subspace(n, k, mix_seed(seed, i))) == 0) ++f.numerator;
  }
  return f;
}

Fraction pedestrian_fraction_exhaustive(std::size_t n, std::size_t k) {
  const auto spaces = all_subspaces(n, k);
  Fraction f{0, spaces.size()};
  for (const auto& v : spaces) {
    if (bicycle_dimension(v) == 0) ++f.numerator;
  }
  return f;
}

ExperimentReport run_experiment(const std::vector<Subspace>& spaces, std::size_t graph_cap) {
  ExperimentReport report;
  report.samples = spaces.size();
  if (!spaces.empty()) report.n = spaces.front().ground_size();
  report.pedestrian.denominator = spaces.size();

  std::vector<Analysis> analyses;
  std::vector<InvariantProfile> profiles;
  analyses.reserve(spaces.size());
  profiles.reserve(spaces.size());
  for (const auto& v : spaces) {
    analyses.push_back(analyze(v));
    profiles.push_back(profile(analyses.back()));
    if (analyses.back().qbasis.bicycle_dim == 0) ++report.pedestrian.numerator;
  }

  // Buckets of identical profiles, found via the digest.
  std::map<std::uint64_t, std::vector<std::vector<std::size_t>>> by_digest;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    auto& groups = by_digest[profiles[i].digest()];
    auto it = std::find_if(groups.begin(), groups.end(), [&](const std::vector<std::size_t>& grp) {
      return profiles[grp.front()] == profiles[i];
    });
    if (it == groups.end()) {
      groups.push_back({i});
    } else {
      it->push_back(i);
    }
  }

  const std::uint64_t s = spaces.size();
  report.pairs = s < 2 ? 0 : s * (s - 1) / 2;
  std::uint64_t same_profile_pairs = 0;
  for (const auto& [digest, groups] : by_digest) {
    for (const auto& grp : groups) {
      ++report.profile_buckets;
      for (std::size_t a = 0; a < grp.size(); ++a) {
        for (std::size_t b = a + 1; b < grp.size(); ++b) {
          ++same_profile_pairs;
          const PrefilterResult r = spaces[grp[a]] == spaces[grp[b]]
                                        ? PrefilterResult{Verdict::IsomorphicCertain, "identical"}
                                        : prefilter(analyses[grp[a]], analyses[grp[b]], graph_cap);
          switch (r.verdict) {
            case Verdict::IsomorphicCertain:
              ++report.isomorphic_pairs;
              ++report.resolved_by_graphs;
              break;
            case Verdict::DistinctCertain: ++report.resolved_by_graphs; break;
            case Verdict::Unknown: ++report.unknown; break;
          }
        }
      }
    }
  }
  report.resolved_by_invariants = report.pairs - same_profile_pairs;
  return report;
}

ExperimentReport run_experiment(std::size_t n, std::size_t k, std::size_t samples,
                                std::uint64_t seed, std::size_t graph_cap) {
  std::vector<Subspace> spaces;
  spaces.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) spaces.push_back(random_subspace(n, k, mix_seed(seed, i)));
  ExperimentReport report = run_experiment(spaces, graph_cap);
  report.n = n;
  report.k = k;
  report.seed = seed;
  return report;
}

}  // namespace bicycle
