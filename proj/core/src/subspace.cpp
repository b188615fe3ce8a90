#include "bicycle/subspace.hpp"

#include <algorithm>
#include <random>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

BitVector delete_coordinate(const BitVector& v, std::size_t e) {
  BitVector out(v.size() - 1);
  for (std::size_t i = v.find_first(); i < v.size(); i = v.find_next(i + 1)) {
    if (i < e) {
      out.set(i);
    } else if (i > e) {
      out.set(i - 1);
    }
  }
  return out;
}

void random_fill(BitVector& v, std::mt19937_64& gen) {
  auto words = v.words();
  for (auto& w : words) w = gen();
  if (const std::size_t r = v.size() % BitVector::kWordBits; r != 0 && !words.empty()) {
    words.back() &= (BitVector::word_type{1} << r) - 1;
  }
}

}  // namespace

Subspace Subspace::from_rows(const BitMatrix& rows) { return Subspace(rref(rows)); }

Subspace Subspace::span(std::size_t ground_size, std::span<const BitVector> vectors) {
  return from_rows(BitMatrix(ground_size, std::vector<BitVector>(vectors.begin(), vectors.end())));
}

Subspace Subspace::zero(std::size_t ground_size) { return from_rows(BitMatrix(0, ground_size)); }

Subspace Subspace::full(std::size_t ground_size) {
  return from_rows(BitMatrix::identity(ground_size));
}

bool Subspace::contains(const BitVector& v) const {
  if (v.size() != ground_size()) return false;
  BitVector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (r.test(pivots_[i])) r ^= basis_.row(i);
  }
  return r.none();
}

BitVector Subspace::coordinates(const BitVector& v) const {
  BitVector c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c.set(i, v.test(pivots_[i]));
  return c;
}

bool Subspace::is_loop(std::size_t e) const {
  const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), e);
  if (it == pivots_.end() || *it != e) return false;
  return basis_.row(static_cast<std::size_t>(it - pivots_.begin())).count() == 1;
}

Subspace dual(const Subspace& v) { return Subspace::from_rows(kernel_basis(v.basis())); }

BicycleSpace bicycle(const Subspace& v) {
  const BitMatrix coefficients = kernel_basis(gram(v.basis()));
  BitMatrix rows(0, v.ground_size());
  for (const auto& c : coefficients.row_vectors()) rows.append_row(combine(v.basis(), c));
  return {Subspace::from_rows(rows), coefficients.rows()};
}

std::size_t bicycle_dimension(const Subspace& v) { return v.dim() - rank(gram(v.basis())); }

Subspace contract(const Subspace& v, std::size_t e) {
  if (e >= v.ground_size()) {
    throw InputError("contract: element " + std::to_string(e) + " not in ground set of size " +
                     std::to_string(v.ground_size()));
  }
  BitMatrix rows(0, v.ground_size() - 1);
  for (const auto& r : v.basis().row_vectors()) rows.append_row(delete_coordinate(r, e));
  return Subspace::from_rows(rows);
}

std::size_t matroid_rank(const Subspace& v, const BitVector& subset) {
  if (subset.size() != v.ground_size()) throw InputError("matroid_rank: subset has wrong length");
  // r(F) = |F| - dim{v : supp(v) ⊆ F}; that kernel is the kernel of restriction to E∖F.
  const BitVector outside = ~subset;
  BitMatrix restricted(0, v.ground_size());
  for (const auto& r : v.basis().row_vectors()) restricted.append_row(r & outside);
  return subset.count() - v.dim() + rank(restricted);
}

Subspace permute(const Subspace& v, std::span<const std::size_t> perm) {
  const std::size_t n = v.ground_size();
  if (perm.size() != n) throw InputError("permute: permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw InputError("permute: not a bijection of the ground set");
    seen[p] = true;
  }
  BitMatrix rows(0, n);
  for (const auto& r : v.basis().row_vectors()) {
    BitVector image(n);
    for (std::size_t i = r.find_first(); i < n; i = r.find_next(i + 1)) image.set(perm[i]);
    rows.append_row(std::move(image));
  }
  return Subspace::from_rows(rows);
}

Subspace random_subspace(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw InputError("random_subspace: dimension exceeds ground size");
  std::mt19937_64 gen(seed);
  BitMatrix m(k, n);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) random_fill(m.row(i), gen);
    RowEchelon e = rref(m);
    if (e.rank() == k) return Subspace::from_rows(e.reduced);
  }
}

std::vector<Subspace> all_subspaces(std::size_t n, std::size_t k) {
  std::vector<Subspace> out;
  if (k > n) return out;
  // Pivot sets as k-subsets of columns, in lexicographic order.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = pivots[i] + 1; j < n; ++j) {
        if (!is_pivot[j]) free_slots.emplace_back(i, j);
      }
    }
    const std::uint64_t combos = std::uint64_t{1} << free_slots.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      BitMatrix m(k, n);
      for (std::size_t i = 0; i < k; ++i) m.set(i, pivots[i]);
      for (std::size_t s = 0; s < free_slots.size(); ++s) {
        if ((mask >> s) & 1u) m.set(free_slots[s].first, free_slots[s].second);
      }
      out.push_back(Subspace::from_rows(m));
    }
    // Next k-subset.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> all_subspaces(std::size_t n) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = all_subspaces(n, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace bicycle
