#include "bicycle/tutte.hpp"

#include <array>
#include <bit>
#include <vector>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

/// Rank of a set of ≤64-bit rows by insertion into a pivot table.
std::size_t word_rank(std::span<const std::uint64_t> rows) {
  std::array<std::uint64_t, 64> table{};
  std::size_t r = 0;
  for (std::uint64_t x : rows) {
    while (x != 0) {
      const int top = 63 - std::countl_zero(x);
      if (table[top] == 0) {
        table[top] = x;
        ++r;
        break;
      }
      x ^= table[top];
    }
  }
  return r;
}

}  // namespace

GaussianInteger TuttePointValue::to_gaussian() const {
  if (zero_) return GaussianInteger(0);
  auto z = sqrt2_polar(d_, octant_);
  if (!z) throw UndefinedInvariantError("value " + to_string() + " is not a Gaussian integer");
  return *z;
}

std::string TuttePointValue::to_string() const {
  if (zero_) return "0";
  return "sqrt2^" + std::to_string(d_) + "*exp(i*pi*" + std::to_string(octant_) + "/4)";
}

bool operator==(const TuttePointValue& value, const GaussianInteger& z) {
  if (!value.is_gaussian_integer()) return false;
  return value.to_gaussian() == z;
}

TutteEvaluation evaluate_detailed(const QBasis& qb) {
  TutteEvaluation out;
  out.ground_size = qb.ground_size;
  out.rank = qb.ground_size - qb.dim();
  out.bicycle_dim = qb.bicycle_dim;
  if (!bicycle_q_vanishes(qb)) {
    out.value = TuttePointValue::zero();
    return out;
  }
  const unsigned sigma = brown_sigma(qb);
  out.sigma = sigma;
  // octant = σ + |E| - 3 r(E) mod 8
  const long long octant = static_cast<long long>(sigma) + static_cast<long long>(out.ground_size) -
                           3 * static_cast<long long>(out.rank);
  out.value = TuttePointValue::polar(static_cast<unsigned>(qb.bicycle_dim),
                                     static_cast<unsigned>(((octant % 8) + 8) % 8));
  return out;
}

TuttePointValue evaluate(const QBasis& qb) { return evaluate_detailed(qb).value; }

TuttePointValue evaluate(const Subspace& v) { return evaluate(compute_q_basis(v)); }

TuttePointValue evaluate_via_dual(const Subspace& v) { return evaluate(dual(v)).conj(); }

GaussianInteger brute_force_tutte_at_point(const Subspace& v, std::size_t cap) {
  const std::size_t n = v.ground_size();
  if (n > cap) throw CapError("brute_force_tutte_at_point", n, cap);
  if (n >= 64) throw CapError("brute_force_tutte_at_point", n, 63);
  const std::size_t k = v.dim();
  const std::size_t full_rank = n - k;

  // counts[a][b] = #{F : r(E) - r(F) = a, |F| - r(F) = b}
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  const std::uint64_t subsets = std::uint64_t{1} << n;

  // n < 64, so each basis row fits in its first word.
  std::vector<std::uint64_t> rows;
  for (const auto& r : v.basis().row_vectors()) rows.push_back(r.words()[0]);
  std::vector<std::uint64_t> restricted(k);
  for (std::uint64_t f = 0; f < subsets; ++f) {
    // r(F) = |F| - k + rank of the basis restricted to E∖F.
    for (std::size_t i = 0; i < k; ++i) restricted[i] = rows[i] & ~f;
    const std::size_t size = static_cast<std::size_t>(std::popcount(f));
    const std::size_t r = size - k + word_rank(restricted);
    ++counts[full_rank - r][size - r];
  }

  const GaussianInteger x_minus_1(-1, -1);  // -ι - 1
  const GaussianInteger y_minus_1(-1, 1);   //  ι - 1
  GaussianInteger total(0);
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= n; ++b) {
      if (counts[a][b] == 0) continue;
      total += GaussianInteger(BigInt(counts[a][b])) * pow(x_minus_1, static_cast<unsigned>(a)) *
               pow(y_minus_1, static_cast<unsigned>(b));
    }
  }
  return total;
}

GreeneCheck greene_sum_check(const Subspace& v, std::size_t brown_cap, std::size_t tutte_cap) {
  GreeneCheck out;
  out.lhs = brown_sum_oracle(v, brown_cap);
  const std::size_t n = v.ground_size();
  const std::size_t r = n - v.dim();
  out.rhs = i_pow(static_cast<long long>(r)) * pow(GaussianInteger(1, -1), static_cast<unsigned>(n - r)) *
            brute_force_tutte_at_point(v, tutte_cap);
  return out;
}

}  // namespace bicycle
