#pragma once

#include <optional>
#include <vector>

#include "pflab/poly.hpp"

namespace pflab {

// Degree caps that turn Poly into a truncated-series ring. A term survives
// when its q-exponent is within q_cap (if set) and, for every block, the sum
// of its exponents over the block's variables is within that block's cap.
// Truncation is idempotent, commutes with addition, and satisfies
//   truncate(p * r) == truncate(truncate(p) * truncate(r)),
// which is what makes eager truncation after every multiplication sound.
struct TruncationPolicy {
  std::optional<long> q_cap;
  std::vector<std::pair<std::vector<VarId>, long>> block_caps;

  static TruncationPolicy none() { return TruncationPolicy{}; }

  // q capped at dq plus one block per listed variable group.
  static TruncationPolicy caps(long dq,
                               std::vector<std::pair<std::vector<VarId>, long>> blocks = {});

  TruncationPolicy& with_block(std::vector<VarId> vars, long cap);

  bool keeps(const Monomial& m) const;
  Poly truncate(const Poly& p) const;

  // True when v is the q variable under q_cap or occurs in some block.
  bool bounds(VarId v) const;
  // True when every variable of p is bounded; the termination precondition
  // for series expansion.
  bool bounds_all(const Poly& p) const;
};

// Truncating multiplication (eager: the product never materializes terms the
// policy would drop at collection time in a grossly larger form; inputs are
// truncated first, the product after).
Poly poly_mul(const Poly& a, const Poly& b, const TruncationPolicy& policy);

// Multiplicative inverse of u as a truncated series. Requires a nonzero
// constant term (NotAUnit otherwise) and a policy bounding every variable of
// u minus its constant (the geometric series then terminates).
Poly series_inverse(const Poly& u, const TruncationPolicy& policy);

// q-shifted factorial (base; q^step)_n = prod_{k=0..n-1} (1 - base*q^(step*k)).
// n == nullopt means the infinite product: factors are accumulated until
// base*q^(step*k) truncates to zero, which requires q_cap to be set unless
// base itself truncates away (NonTerminating otherwise).
Poly pochhammer(const Poly& base, std::optional<long> n, const TruncationPolicy& policy,
                long step = 1);

} // namespace pflab
