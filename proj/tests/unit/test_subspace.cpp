#include <doctest.h>

#include <random>

#include "support/oracles.hpp"

using namespace bicycle;
using bicycle::testing::rows;

TEST_CASE("from_rows") {
  CHECK(rows({"11", "11"}, 2).dim() == 1);
  CHECK(rows({"11", "11"}, 2).basis() == BitMatrix::from_strings({"11"}));
  CHECK(Subspace::zero(3).dim() == 0);
  CHECK(Subspace::zero(3).ground_size() == 3);
  CHECK(rows({"110", "011", "101"}, 3).dim() == 2);
  CHECK(rows({"110", "011"}, 3) == rows({"011", "101"}, 3));
}

TEST_CASE("dual") {
  CHECK(dual(Subspace::full(2)) == Subspace::zero(2));
  CHECK(dual(Subspace::zero(3)) == Subspace::full(3));
  CHECK(dual(rows({"11"}, 2)) == rows({"11"}, 2));
}

TEST_CASE("bicycle") {
  auto b = bicycle::bicycle(rows({"11"}, 2));
  CHECK(b.dimension == 1);
  CHECK(b.space == rows({"11"}, 2));
  CHECK(bicycle::bicycle(Subspace::full(2)).dimension == 0);
  auto two = rows({"1100", "0011"}, 4);
  CHECK(bicycle::bicycle(two).dimension == 2);
  CHECK(bicycle::bicycle(two).space == two);
}

TEST_CASE("contract") {
  CHECK(contract(rows({"1111"}, 4), 3) == rows({"111"}, 3));
  CHECK(contract(Subspace::full(2), 0) == Subspace::full(1));
  auto v = rows({"100", "011"}, 3);
  CHECK(contract(v, 0) == rows({"11"}, 2));
  CHECK(contract(v, 0).dim() == 1);
  CHECK_THROWS_AS(contract(v, 3), InputError);
}

TEST_CASE("q_weight") {
  CHECK(q_weight(BitVector::from_string("1111")) == 0);
  CHECK(q_weight(BitVector::from_string("111")) == 3);
  CHECK(q_weight(BitVector(5)) == 0);
}

TEST_CASE("matroid_rank") {
  CHECK(matroid_rank(rows({"11"}, 2), BitVector::from_string("11")) == 1);
  CHECK(matroid_rank(Subspace::zero(4), BitVector::from_string("1011")) == 3);
  CHECK(matroid_rank(rows({"1111"}, 4), BitVector::ones(4)) == 3);
  CHECK_THROWS_AS(matroid_rank(rows({"11"}, 2), BitVector(3)), InputError);
}

TEST_CASE("permute") {
  auto v = rows({"110"}, 3);
  const std::vector<std::size_t> identity{0, 1, 2};
  const std::vector<std::size_t> swap12{0, 2, 1};
  CHECK(permute(v, identity) == v);
  CHECK(permute(v, swap12) == rows({"101"}, 3));
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(permute(v, bad), InputError);
  const std::vector<std::size_t> short_perm{0, 1};
  CHECK_THROWS_AS(permute(v, short_perm), InputError);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto w = random_subspace(n, rng() % (n + 1), rng());
    const auto p = testing::random_permutation(n, rng);
    CHECK(permute(permute(w, p), testing::inverse_permutation(p)) == w);
  }
}

TEST_CASE("random_subspace") {
  CHECK(random_subspace(10, 4, 99) == random_subspace(10, 4, 99));
  CHECK(random_subspace(4, 4, 12345) == Subspace::full(4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(random_subspace(30, 10, seed).dim() == 10);
  CHECK_THROWS_AS(random_subspace(3, 4, 0), InputError);
}

TEST_CASE("all_subspaces counts match Gaussian binomials") {
  const std::size_t expected[] = {1, 2, 5, 16, 67, 374};
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto spaces = all_subspaces(n);
    CHECK(spaces.size() == expected[n]);
    for (std::size_t i = 1; i < spaces.size(); ++i) CHECK_FALSE(spaces[i] == spaces[0]);
  }
  // Distinctness at n = 4.
  auto s4 = all_subspaces(4);
  std::vector<std::string> keys;
  for (const auto& v : s4) keys.push_back(format_matrix_text(v));
  std::sort(keys.begin(), keys.end());
  CHECK(std::unique(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("subspace invariants on small spaces") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto spaces = all_subspaces(n);
    for (const auto& v : spaces) {
      const Subspace d = dual(v);
      CHECK(v.dim() + d.dim() == n);
      CHECK(dual(d) == v);
      CHECK(bicycle::bicycle(v).space == bicycle::bicycle(d).space);
      CHECK(bicycle::bicycle(v).dimension == testing::naive_bicycle_dim(v));
      CHECK(bicycle_dimension(v) == bicycle::bicycle(v).dimension);
      for (std::size_t e = 0; e < n; ++e) {
        const std::size_t drop = v.contains(BitVector::unit(n, e)) ? 1 : 0;
        CHECK(contract(v, e).dim() == v.dim() - drop);
        CHECK(v.is_loop(e) == (drop == 1));
      }
    }
  }
}

TEST_CASE("containment reverses under duality") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = random_subspace(n, rng() % (n + 1), rng());
    // Build b ⊇ a half of the time.
    Subspace b = random_subspace(n, rng() % (n + 1), rng());
    if (trial % 2 == 0) {
      std::vector<BitVector> gens = a.basis().row_vectors();
      for (const auto& r : b.basis().row_vectors()) gens.push_back(r);
      b = Subspace::span(n, gens);
    }
    auto contained = [](const Subspace& x, const Subspace& y) {
      for (const auto& r : x.basis().row_vectors()) {
        if (!y.contains(r)) return false;
      }
      return true;
    };
    CHECK(contained(a, b) == contained(dual(b), dual(a)));
  }
}

TEST_CASE("matroid_rank agrees with direct counting; monotone and submodular") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& v : all_subspaces(n)) {
      const auto elems = testing::element_masks(v);
      const std::uint64_t subsets = std::uint64_t{1} << n;
      std::vector<std::size_t> r(subsets);
      for (std::uint64_t f = 0; f < subsets; ++f) {
        r[f] = matroid_rank(v, testing::mask_vector(n, f));
        REQUIRE(r[f] == testing::naive_rank(elems, f));
      }
      CHECK(r[subsets - 1] == n - v.dim());
      if (n > 5) continue;  // pairwise checks are quadratic in 2^n
      for (std::uint64_t a = 0; a < subsets; ++a) {
        for (std::uint64_t b = 0; b < subsets; ++b) {
          if ((a & b) == a) REQUIRE(r[a] <= r[b]);
          REQUIRE(r[a | b] + r[a & b] <= r[a] + r[b]);
        }
      }
    }
  }
}
