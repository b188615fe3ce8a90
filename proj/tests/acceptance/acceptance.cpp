// Acceptance gate: runs every criterion at full size and prints one line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace bicycle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

std::string describe(const Subspace& v) {
  std::string s = "n=" + std::to_string(v.ground_size()) + " [";
  for (const auto& r : v.basis().row_vectors()) s += " " + r.to_string();
  return s + " ]";
}

// Every subspace of GF(2)^n for n <= 5, then `random_count` seeded spaces
// with 1 <= n <= max_n and uniformly chosen dimension.
std::vector<Subspace> corpus(std::size_t random_count, std::size_t max_n, std::uint64_t seed) {
  std::vector<Subspace> out;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (auto& v : all_subspaces(n)) out.push_back(std::move(v));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t k = rng() % (n + 1);
    out.push_back(random_subspace(n, k, rng()));
  }
  return out;
}

const std::vector<Subspace>& tutte_corpus() {
  static const std::vector<Subspace> spaces = corpus(1000, 12, 0x7e77e);
  return spaces;
}

std::size_t exhaustive_count() {
  std::size_t c = 0;
  for (std::size_t n = 0; n <= 5; ++n) c += all_subspaces(n).size();
  return c;
}

GaussianInteger free_part_sum(const QBasis& qb) {
  std::vector<BitVector> free(qb.free_part().begin(), qb.free_part().end());
  return brown_sum_oracle(Subspace::span(qb.ground_size, free));
}

Outcome closed_form_vs_brute_force() {
  Outcome o;
  std::size_t naive_checked = 0;
  for (const auto& v : tutte_corpus()) {
    const GaussianInteger brute = brute_force_tutte_at_point(v);
    o.require(evaluate(v) == brute, "evaluate != brute force for " + describe(v));
    if (v.ground_size() <= 5) {
      o.require(testing::to_big(testing::naive_tutte(v)) == brute,
                "subset-expansion oracle disagrees for " + describe(v));
      ++naive_checked;
    }
  }
  o.detail = std::to_string(tutte_corpus().size()) + " spaces (" +
             std::to_string(exhaustive_count()) + " exhaustive n<=5 + 1000 random n<=12), " +
             std::to_string(naive_checked) + " also against the subset expansion";
  return o;
}

Outcome greene_identity() {
  Outcome o;
  for (const auto& v : tutte_corpus()) {
    const GreeneCheck g = greene_sum_check(v);
    o.require(g.lhs == g.rhs, "lhs " + g.lhs.to_string() + " != rhs " + g.rhs.to_string() +
                                  " for " + describe(v));
  }
  o.detail = std::to_string(tutte_corpus().size()) + " spaces";
  return o;
}

Outcome brown_identity() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t alternating = 0;
  auto check = [&](const QBasis& qb, const std::string& label) {
    if (!bicycle_q_vanishes(qb)) return;
    const unsigned sigma = brown_sigma(qb);
    const auto expected = sqrt2_polar(static_cast<unsigned>(qb.free_dim()), sigma);
    o.require(expected.has_value(), "sigma parity wrong for " + label);
    if (expected) o.require(free_part_sum(qb) == *expected, "Brown sum mismatch for " + label);
    ++checked;
    if (qb.kind == FormKind::alternating) ++alternating;
  };
  for (const auto& v : tutte_corpus()) check(compute_q_basis(v), describe(v));

  std::mt19937_64 rng(0xb0b);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 24;
    const std::size_t k = rng() % (std::min<std::size_t>(n, 16) + 1);
    const auto v = random_subspace(n, k, rng());
    check(compute_q_basis(v, rng()), describe(v));
  }

  // Hyperbolic pairs with q = (0, 0) and (2, 2), by four-term summation.
  auto pair_basis = [](std::size_t n, std::string_view a, std::string_view b) {
    QBasis qb;
    qb.ground_size = n;
    qb.kind = FormKind::alternating;
    qb.vectors = {BitVector::from_string(a), BitVector::from_string(b)};
    qb.q_values = {q_weight(qb.vectors[0]), q_weight(qb.vectors[1])};
    validate(qb);
    return qb;
  };
  const QBasis zero_zero = pair_basis(7, "1111000", "0001111");
  const QBasis two_two = pair_basis(3, "110", "011");
  o.require(brown_sigma(zero_zero) == 0 && free_part_sum(zero_zero) == GaussianInteger(2),
            "(0,0) pair should give sigma 0 and sum 2");
  o.require(brown_sigma(two_two) == 4 && free_part_sum(two_two) == GaussianInteger(-2),
            "(2,2) pair should give sigma 4 and sum -2");
  o.detail = std::to_string(checked) + " q-bases (" + std::to_string(alternating) +
             " alternating, incl. 1000 random dim<=16) + (0,0)->0 and (2,2)->4 pairs";
  return o;
}

Outcome modulus_law() {
  Outcome o;
  std::size_t nonzero = 0;
  for (const auto& v : tutte_corpus()) {
    const auto value = evaluate(v);
    if (value.is_zero()) continue;
    ++nonzero;
    const std::size_t d = bicycle_dimension(v);
    o.require(value.sqrt2_power() == d, "d mismatch for " + describe(v));
    o.require(brute_force_tutte_at_point(v).norm() == BigInt(1) << d,
              "|T|^2 != 2^d for " + describe(v));
  }
  o.detail = std::to_string(nonzero) + " nonzero values, |T|^2 = 2^d checked on brute-force values";
  return o;
}

Outcome duality() {
  Outcome o;
  for (const auto& v : tutte_corpus()) {
    o.require(evaluate_via_dual(v) == evaluate(v), "dual evaluation differs for " + describe(v));
  }
  o.detail = std::to_string(tutte_corpus().size()) + " spaces";
  return o;
}

Outcome tripartition_matches_oracle() {
  Outcome o;
  const auto spaces = corpus(1000, 14, 0x3a3a);
  for (const auto& v : spaces) {
    try {
      o.require(tripartition(v) == tripartition_oracle(v), "fast != oracle for " + describe(v));
    } catch (const InvariantError& e) {
      o.require(false, std::string("oracle saw a change outside {-1,0,1}: ") + e.what());
    }
  }
  o.detail = std::to_string(spaces.size()) + " spaces (exhaustive n<=5 + 1000 random n<=14)";
  return o;
}

Outcome projection_properties() {
  Outcome o;
  std::size_t pedestrian = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& v : all_subspaces(n)) {
      if (bicycle_dimension(v) != 0) continue;
      ++pedestrian;
      const BitMatrix q = projector(compute_q_basis(v)).matrix;
      o.require(q.is_symmetric(), "not symmetric for " + describe(v));
      o.require(multiply(q, q) == q, "not idempotent for " + describe(v));
      for (const auto& x : v.basis().row_vectors()) {
        o.require(apply(q, x) == x, "does not fix V for " + describe(v));
      }
      const Subspace perp = dual(v);
      for (const auto& y : perp.basis().row_vectors()) {
        o.require(apply(q, y).none(), "does not annihilate the dual for " + describe(v));
      }
      o.require(q == testing::projector_by_inverse(v), "differs from A^T(AA^T)^-1 A for " + describe(v));
    }
  }

  std::mt19937_64 rng(0x9a9a);
  std::size_t recomputations = 0;
  while (recomputations < 200) {
    const std::size_t n = 2 + rng() % 20;
    const auto v = random_subspace(n, 1 + rng() % n, rng());
    if (bicycle_dimension(v) == 0) continue;
    const Tripartition t = tripartition(v);
    const BitVector outside = ~t.minus;
    const Projector base = restrict(free_part_projector(compute_q_basis(v)), outside);
    const Projector other = restrict(free_part_projector(compute_q_basis(v, rng())), outside);
    o.require(base == other, "Q[F,F] depends on the complement for " + describe(v));
    ++recomputations;
  }
  o.detail = std::to_string(pedestrian) + " pedestrian spaces n<=5; 200 randomized complements";
  return o;
}

Outcome graph_theorem() {
  Outcome o;
  std::size_t iff_pairs = 0;
  std::size_t only_if_pairs = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto spaces = all_subspaces(n);
    std::vector<SupportGraph> graphs;
    for (const auto& v : spaces) graphs.push_back(reduced_graph(v));
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      for (std::size_t j = i; j < spaces.size(); ++j) {
        if (spaces[i].dim() != spaces[j].dim()) continue;
        const bool iso = brute_matroid_iso(spaces[i], spaces[j]);
        const bool giso = graph_iso(graphs[i], graphs[j]);
        ++only_if_pairs;
        if (iso) {
          o.require(giso, "isomorphic but reduced graphs differ: " + describe(spaces[i]) +
                              " vs " + describe(spaces[j]));
        }
        if (n == 4 && bicycle_dimension(spaces[i]) == 0 && bicycle_dimension(spaces[j]) == 0) {
          ++iff_pairs;
          o.require(iso == giso, "iff fails for " + describe(spaces[i]) + " vs " +
                                     describe(spaces[j]));
        }
      }
    }
  }
  o.detail = std::to_string(iff_pairs) + " pedestrian pairs at n=4 (iff), " +
             std::to_string(only_if_pairs) + " equal-dimension pairs n<=4 (only if)";
  return o;
}

Outcome census() {
  Outcome o;
  std::mt19937_64 rng(0xce75);
  std::size_t half_checked = 0;
  std::size_t half_failed = 0;
  std::size_t rule_mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 10;
    const std::size_t k = rng() % (std::min<std::size_t>(n, 6) + 1);
    const auto w = random_subspace(n, k, rng());
    const std::size_t d = bicycle_dimension(w);
    const Census c = extension_census(w);
    const std::size_t all = std::size_t{1} << k;
    const std::size_t rest = std::size_t{1} << (k - d);
    o.require(c.down == all - rest, "down count wrong for " + describe(w));

    bool even = true;
    for (const auto& r : w.basis().row_vectors()) even = even && r.count() % 2 == 0;
    // With every vector of W even, AA^T has zero diagonal and no lift raises d.
    const Census corrected = even ? Census{all - rest, rest, 0}
                                  : Census{all - rest, k > d ? rest / 2 : rest, k > d ? rest / 2 : 0};
    if (!(c == corrected)) ++rule_mismatches;
    o.require(c == corrected, "census differs from the parity rule for " + describe(w));

    if (k > d) {
      ++half_checked;
      const bool half = c.same == rest / 2 && c.up == rest / 2;
      if (!half) ++half_failed;
      o.require(half, "same/up split is not half/half for " + describe(w) + " (same=" +
                          std::to_string(c.same) + ", up=" + std::to_string(c.up) + ")");
    }
  }
  o.detail = "200 random W (n<=10, k<=6): down exact on all; half/half holds on " +
             std::to_string(half_checked - half_failed) + " of " + std::to_string(half_checked) +
             " with k>d; the misses are W with only even vectors, where up=0 and same=2^(k-d); "
             "that parity rule missed " + std::to_string(rule_mismatches) + " of 200";
  return o;
}

Outcome pedestrian_density() {
  Outcome o;
  std::ostringstream detail;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ExperimentReport r = run_experiment(30, 10, 10000, seed);
    const double f = r.pedestrian.value();
    o.require(f >= 0.40 && f <= 0.44, "fraction " + std::to_string(f) + " for seed " +
                                          std::to_string(seed));
    o.require(r.pedestrian.numerator == pedestrian_fraction(30, 10, 10000, seed).numerator,
              "experiment and pedestrian_fraction disagree");
    o.require(r.resolved_share() >= 0.999, "resolved share " + std::to_string(r.resolved_share()));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%sseed %llu: fraction %.4f, resolved %.6f (%llu unknown of %llu)",
                  seed == 1 ? "" : "; ", static_cast<unsigned long long>(seed), f,
                  r.resolved_share(), static_cast<unsigned long long>(r.unknown),
                  static_cast<unsigned long long>(r.pairs));
    detail << buf;
  }
  o.detail = detail.str();
  return o;
}

double median_seconds(const Subspace& v) {
  std::vector<double> times;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const QBasis qb = compute_q_basis(v);
    const TuttePointValue value = evaluate(qb);
    const auto stop = std::chrono::steady_clock::now();
    if (value.sqrt2_power() > v.dim()) std::abort();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[1];
}

Outcome complexity() {
  Outcome o;
  const auto small = random_subspace(10000, 1000, 11);
  const auto large = random_subspace(10000, 2000, 12);
  const double t1 = median_seconds(small);
  const double t2 = median_seconds(large);
  const double ratio = t2 / t1;
  o.require(ratio <= 5.0, "time ratio " + std::to_string(ratio));
  char buf[128];
  std::snprintf(buf, sizeof buf, "k=1000: %.3f s, k=2000: %.3f s, ratio %.2f (bound 5)", t1, t2, ratio);
  o.detail = buf;
  return o;
}

Outcome permutation_invariance() {
  Outcome o;
  std::mt19937_64 rng(0x9e3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const auto v = random_subspace(n, rng() % (n + 1), rng());
    const auto p = testing::random_permutation(n, rng);
    o.require(profile(permute(v, p)) == profile(v), "profile changed for " + describe(v));
  }
  o.detail = "500 random (V, pi), n<=40";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed form equals brute force", closed_form_vs_brute_force},
      {2, "Greene identity", greene_identity},
      {3, "Brown identity", brown_identity},
      {4, "modulus law", modulus_law},
      {5, "duality", duality},
      {6, "tripartition fast rule equals oracle", tripartition_matches_oracle},
      {7, "projector properties and complement independence", projection_properties},
      {8, "projection graph isomorphism theorem", graph_theorem},
      {9, "coextension census", census},
      {10, "pedestrian fraction and experiment resolution", pedestrian_density},
      {11, "complexity smoke test", complexity},
      {12, "profile permutation invariance", permutation_invariance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s | %s | %.1f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, o.pass ? "" : " | first failure: ",
                o.pass ? "" : o.first_failure.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
