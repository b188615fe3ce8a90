#include "bicycle/qform.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <utility>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

bool odd(const BitVector& v) noexcept { return v.count() & 1u; }

std::optional<std::size_t> find_partner(const std::vector<BitVector>& pool, std::size_t x) {
  for (std::size_t j = 0; j < pool.size(); ++j) {
    if (j != x && dot(pool[x], pool[j])) return j;
  }
  return std::nullopt;
}

void remove_at(std::vector<BitVector>& pool, std::size_t i) {
  std::swap(pool[i], pool.back());
  pool.pop_back();
}

/// Splits off a hyperbolic pair (x, y) from an alternating pool and projects
/// the rest onto its orthogonal complement.
std::pair<BitVector, BitVector> split_hyperbolic_pair(std::vector<BitVector>& pool) {
  const auto partner = find_partner(pool, 0);
  if (!partner) throw InvariantError("q-basis: free part is degenerate");
  BitVector x = pool[0];
  BitVector y = pool[*partner];
  remove_at(pool, *partner);
  remove_at(pool, 0);
  for (auto& u : pool) {
    const bool with_y = dot(u, y);
    const bool with_x = dot(u, x);
    if (with_y) u ^= x;
    if (with_x) u ^= y;
  }
  return {std::move(x), std::move(y)};
}

/// Orthogonal or alternating basis of a space with nondegenerate inner product.
std::pair<FormKind, std::vector<BitVector>> decompose_free_part(std::vector<BitVector> pool) {
  if (pool.empty()) return {FormKind::empty, {}};

  if (std::none_of(pool.begin(), pool.end(), odd)) {
    std::vector<BitVector> firsts;
    std::vector<BitVector> seconds;
    while (!pool.empty()) {
      auto [x, y] = split_hyperbolic_pair(pool);
      firsts.push_back(std::move(x));
      seconds.push_back(std::move(y));
    }
    firsts.insert(firsts.end(), std::make_move_iterator(seconds.begin()),
                  std::make_move_iterator(seconds.end()));
    return {FormKind::alternating, std::move(firsts)};
  }

  std::vector<BitVector> orthogonal;
  while (!pool.empty()) {
    const auto it = std::find_if(pool.begin(), pool.end(), odd);
    if (it != pool.end()) {
      BitVector v = *it;
      remove_at(pool, static_cast<std::size_t>(it - pool.begin()));
      for (auto& w : pool) {
        if (dot(w, v)) w ^= v;
      }
      orthogonal.push_back(std::move(v));
      continue;
    }
    // What is left is alternating. An odd vector v orthogonal to a
    // hyperbolic pair (x, y) turns into three odd orthogonal vectors
    // v+x, v+y, v+x+y.
    auto [x, y] = split_hyperbolic_pair(pool);
    BitVector v = std::move(orthogonal.back());
    orthogonal.pop_back();
    orthogonal.push_back(v ^ x);
    orthogonal.push_back(v ^ y);
    orthogonal.push_back(v ^ x ^ y);
  }
  return {FormKind::orthogonal, std::move(orthogonal)};
}

/// Reorders the bicycle basis so that only the last vector may have q = 2.
void normalize_bicycle(std::vector<BitVector>& bicycle) {
  const auto pivot = std::find_if(bicycle.begin(), bicycle.end(),
                                  [](const BitVector& b) { return q_weight(b) == 2; });
  if (pivot == bicycle.end()) return;
  std::iter_swap(pivot, bicycle.end() - 1);
  const BitVector& last = bicycle.back();
  for (std::size_t i = 0; i + 1 < bicycle.size(); ++i) {
    // q is additive with values in {0, 2} on V ∩ V⊥.
    if (q_weight(bicycle[i]) == 2) bicycle[i] ^= last;
  }
}

QBasis build_q_basis(const Subspace& v, std::mt19937_64* rng) {
  std::vector<BitVector> rows = v.basis().row_vectors();
  const std::size_t k = rows.size();
  if (rng != nullptr && k > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (std::size_t t = 0; t < 4 * k; ++t) {
      const std::size_t i = pick(*rng);
      const std::size_t j = pick(*rng);
      if (i != j) rows[i] ^= rows[j];
    }
    std::shuffle(rows.begin(), rows.end(), *rng);
  }
  const BitMatrix a(v.ground_size(), std::move(rows));

  // Coefficient vectors in ker(A Aᵀ) give V ∩ V⊥; the unit vectors at the
  // pivot columns of A Aᵀ span a complement of that kernel.
  const BitMatrix g = gram(a);
  const RowEchelon g_echelon = rref(g);
  const BitMatrix null_coefficients = kernel_basis(g);

  std::vector<BitVector> bicycle;
  for (const auto& c : null_coefficients.row_vectors()) bicycle.push_back(combine(a, c));

  std::vector<BitVector> free_pool;
  for (std::size_t p : g_echelon.pivots) free_pool.push_back(a.row(p));
  if (rng != nullptr && !bicycle.empty()) {
    std::bernoulli_distribution coin(0.5);
    for (auto& f : free_pool) {
      for (const auto& b : bicycle) {
        if (coin(*rng)) f ^= b;
      }
    }
    for (std::size_t i = 0; i < bicycle.size(); ++i) {
      for (std::size_t j = 0; j < bicycle.size(); ++j) {
        if (i != j && coin(*rng)) bicycle[i] ^= bicycle[j];
      }
    }
  }

  auto [kind, free_part] = decompose_free_part(std::move(free_pool));
  normalize_bicycle(bicycle);

  QBasis qb;
  qb.ground_size = v.ground_size();
  qb.kind = kind;
  qb.bicycle_dim = bicycle.size();
  qb.vectors = std::move(free_part);
  qb.vectors.insert(qb.vectors.end(), std::make_move_iterator(bicycle.begin()),
                    std::make_move_iterator(bicycle.end()));
  qb.q_values.reserve(qb.vectors.size());
  for (const auto& x : qb.vectors) qb.q_values.push_back(q_weight(x));
  validate(qb);
  return qb;
}

}  // namespace

const char* to_string(FormKind kind) noexcept {
  switch (kind) {
    case FormKind::orthogonal: return "orthogonal";
    case FormKind::alternating: return "alternating";
    case FormKind::empty: break;
  }
  return "empty";
}

QBasis compute_q_basis(const Subspace& v) { return build_q_basis(v, nullptr); }

QBasis compute_q_basis(const Subspace& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return build_q_basis(v, &rng);
}

void validate(const QBasis& qb) {
  const std::size_t k = qb.vectors.size();
  const std::size_t f = qb.free_dim();
  if (qb.bicycle_dim > k) throw InvariantError("q-basis: bicycle part larger than basis");
  if (qb.q_values.size() != k) throw InvariantError("q-basis: q-value count mismatch");
  for (const auto& x : qb.vectors) {
    if (x.size() != qb.ground_size) throw InvariantError("q-basis: vector of wrong length");
  }
  if ((f == 0) != (qb.kind == FormKind::empty)) {
    throw InvariantError("q-basis: kind does not match free part");
  }
  if (qb.kind == FormKind::alternating && f % 2 != 0) {
    throw InvariantError("q-basis: alternating free part of odd dimension");
  }

  const std::size_t m = qb.half();
  auto expected = [&](std::size_t i, std::size_t j) {
    if (i >= f || j >= f) return false;
    if (qb.kind == FormKind::orthogonal) return i == j;
    return i + m == j || j + m == i;
  };
  const BitMatrix g = gram(BitMatrix(qb.ground_size, qb.vectors));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (g(i, j) != expected(i, j)) {
        throw InvariantError("q-basis: Gram entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ") is wrong");
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    const unsigned q = qb.q_values[i];
    if (q != q_weight(qb.vectors[i])) throw InvariantError("q-basis: stale q-value");
    const bool want_odd = i < f && qb.kind == FormKind::orthogonal;
    if ((q % 2 == 1) != want_odd) throw InvariantError("q-basis: q-value has wrong parity");
    if (i >= f && i + 1 < k && q != 0) {
      throw InvariantError("q-basis: bicycle vector before the last has q = 2");
    }
  }
  if (rank(BitMatrix(qb.ground_size, qb.vectors)) != k) {
    throw InvariantError("q-basis: vectors are dependent");
  }
}

bool bicycle_q_vanishes(const QBasis& qb) noexcept {
  return qb.bicycle_dim == 0 || qb.q_values.back() == 0;
}

unsigned brown_sigma(const QBasis& qb) {
  if (!bicycle_q_vanishes(qb)) {
    throw UndefinedInvariantError("brown_sigma: q does not vanish on the bicycle space");
  }
  const std::size_t f = qb.free_dim();
  if (qb.kind == FormKind::orthogonal) {
    long long sigma = 0;
    for (std::size_t i = 0; i < f; ++i) sigma += qb.q_values[i] == 1 ? 1 : -1;
    return static_cast<unsigned>(((sigma % 8) + 8) % 8);
  }
  // A hyperbolic pair contributes 1 + ι^a + ι^b - ι^{a+b}, which is -2
  // exactly when a = b = 2 and 2 otherwise.
  const std::size_t m = qb.half();
  std::size_t negative_pairs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (qb.q_values[i] == 2 && qb.q_values[i + m] == 2) ++negative_pairs;
  }
  return static_cast<unsigned>((4 * negative_pairs) % 8);
}

GaussianInteger brown_sum_oracle(const Subspace& v, std::size_t cap) {
  const std::size_t k = v.dim();
  if (k > cap) throw CapError("brown_sum_oracle", k, cap);
  // Gray-code walk; |x + a| = |x| + |a| - 2|x ∩ a|.
  std::array<std::uint64_t, 4> by_q{1, 0, 0, 0};
  BitVector x(v.ground_size());
  std::size_t weight = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto& a = v.basis().row(static_cast<std::size_t>(std::countr_zero(step)));
    weight = weight + a.count() - 2 * intersection_count(x, a);
    x ^= a;
    ++by_q[weight & 3u];
  }
  return GaussianInteger(BigInt(by_q[0]) - BigInt(by_q[2]), BigInt(by_q[1]) - BigInt(by_q[3]));
}

}  // namespace bicycle
