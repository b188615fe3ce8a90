#pragma once

// Exact evaluation of the Tutte polynomial of M(V) at (x, y) = (-ι, ι).

#include <cstddef>
#include <optional>
#include <string>

#include "bicycle/gaussian.hpp"
#include "bicycle/qform.hpp"
#include "bicycle/subspace.hpp"

namespace bicycle {

/// Either zero or √2^d · e^{ιπ·octant/4}.
class TuttePointValue {
 public:
  static TuttePointValue zero() noexcept { return TuttePointValue(); }
  static TuttePointValue polar(unsigned d, unsigned octant) noexcept {
    return TuttePointValue(d, octant % 8);
  }

  bool is_zero() const noexcept { return zero_; }
  /// Power of √2 in the modulus; 0 for the zero value.
  unsigned sqrt2_power() const noexcept { return d_; }
  unsigned octant() const noexcept { return octant_; }

  bool is_gaussian_integer() const noexcept { return zero_ || (d_ + octant_) % 2 == 0; }
  /// Throws UndefinedInvariantError unless is_gaussian_integer().
  GaussianInteger to_gaussian() const;

  TuttePointValue conj() const noexcept {
    return zero_ ? *this : polar(d_, (8 - octant_) % 8);
  }

  /// "0" or "sqrt2^d*exp(i*pi*k/4)".
  std::string to_string() const;

  friend bool operator==(const TuttePointValue&, const TuttePointValue&) = default;

 private:
  TuttePointValue() = default;
  TuttePointValue(unsigned d, unsigned octant) : zero_(false), d_(d), octant_(octant) {}

  bool zero_ = true;
  unsigned d_ = 0;
  unsigned octant_ = 0;
};

/// Exact comparison with a Gaussian integer.
bool operator==(const TuttePointValue& value, const GaussianInteger& z);

/// The ingredients of one evaluation, for reporting.
struct TutteEvaluation {
  TuttePointValue value = TuttePointValue::zero();
  std::size_t ground_size = 0;
  std::size_t rank = 0;  // r(E) = |E| - dim(V)
  std::size_t bicycle_dim = 0;
  std::optional<unsigned> sigma;  // absent when q does not vanish on V ∩ V⊥
};

TutteEvaluation evaluate_detailed(const QBasis& qb);
TuttePointValue evaluate(const QBasis& qb);
TuttePointValue evaluate(const Subspace& v);

/// Evaluates on V⊥ and conjugates.
TuttePointValue evaluate_via_dual(const Subspace& v);

inline constexpr std::size_t kDefaultTutteCap = 20;

/// Σ_{F⊆E} (-ι-1)^{r(E)-r(F)} (ι-1)^{|F|-r(F)} over all 2^|E| subsets.
/// Throws CapError if |E| > cap.
GaussianInteger brute_force_tutte_at_point(const Subspace& v, std::size_t cap = kDefaultTutteCap);

struct GreeneCheck {
  GaussianInteger lhs;  // Σ_{x∈V} ι^{q(x)}
  GaussianInteger rhs;  // ι^{r(E)} (1-ι)^{|E|-r(E)} T(-ι, ι)
};

GreeneCheck greene_sum_check(const Subspace& v, std::size_t brown_cap = kDefaultBrownCap,
                             std::size_t tutte_cap = kDefaultTutteCap);

}  // namespace bicycle
