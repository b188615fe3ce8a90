#include "bicycle/tripartition.hpp"

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

void check_basis_of(const QBasis& qb, const Subspace& v) {
  if (qb.ground_size != v.ground_size() || qb.dim() != v.dim()) {
    throw InputError("tripartition: q-basis does not match the subspace shape");
  }
  try {
    validate(qb);
  } catch (const InvariantError& e) {
    throw InputError(std::string("tripartition: invalid q-basis: ") + e.what());
  }
  for (const auto& x : qb.vectors) {
    if (!v.contains(x)) throw InputError("tripartition: q-basis vector outside the subspace");
  }
}

}  // namespace

Tripartition tripartition_oracle(const Subspace& v) {
  const std::size_t n = v.ground_size();
  const long long d = static_cast<long long>(bicycle_dimension(v));
  Tripartition t{BitVector(n), BitVector(n), BitVector(n)};
  for (std::size_t e = 0; e < n; ++e) {
    const long long change = static_cast<long long>(bicycle_dimension(contract(v, e))) - d;
    switch (change) {
      case -1: t.minus.set(e); break;
      case 0: t.zero.set(e); break;
      case 1: t.plus.set(e); break;
      default:
        throw InvariantError("tripartition: contracting element " + std::to_string(e) +
                             " changes the bicycle dimension by " + std::to_string(change));
    }
  }
  return t;
}

Tripartition tripartition_fast(const QBasis& qb, const Subspace& v) {
  check_basis_of(qb, v);
  const std::size_t n = v.ground_size();

  BitVector minus(n);
  for (const auto& b : qb.bicycle_part()) minus |= b;

  BitVector plus(n);
  if (qb.kind == FormKind::orthogonal) {
    for (const auto& f : qb.free_part()) plus ^= f;
    plus &= ~minus;
    // The rank-one update argument assumes dim(V/e) = dim(V), which fails
    // exactly at loops; those never change d.
    for (std::size_t e = plus.find_first(); e < n; e = plus.find_next(e + 1)) {
      if (v.is_loop(e)) plus.set(e, false);
    }
  }

  BitVector zero = ~(minus | plus);
  return {std::move(minus), std::move(zero), std::move(plus)};
}

Tripartition tripartition(const Subspace& v) { return tripartition_fast(compute_q_basis(v), v); }

}  // namespace bicycle
