#include "pflab/series.hpp"

#include "pflab/errors.hpp"

namespace pflab {

TruncationPolicy TruncationPolicy::caps(long dq,
                                        std::vector<std::pair<std::vector<VarId>, long>> blocks) {
  TruncationPolicy p;
  p.q_cap = dq;
  p.block_caps = std::move(blocks);
  return p;
}

TruncationPolicy& TruncationPolicy::with_block(std::vector<VarId> vs, long cap) {
  block_caps.emplace_back(std::move(vs), cap);
  return *this;
}

bool TruncationPolicy::keeps(const Monomial& m) const {
  if (q_cap && m.exponent(vars::q()) > *q_cap) return false;
  for (const auto& [block, cap] : block_caps) {
    long total = 0;
    for (VarId v : block) total += m.exponent(v);
    if (total > cap) return false;
  }
  return true;
}

Poly TruncationPolicy::truncate(const Poly& p) const {
  if (!q_cap && block_caps.empty()) return p;
  Poly out;
  for (const auto& [m, c] : p.terms())
    if (keeps(m)) out.add_term(m, c);
  return out;
}

bool TruncationPolicy::bounds(VarId v) const {
  if (q_cap && v == vars::q()) return true;
  for (const auto& [block, cap] : block_caps)
    for (VarId w : block)
      if (w == v) return true;
  return false;
}

bool TruncationPolicy::bounds_all(const Poly& p) const {
  for (VarId v : p.variables())
    if (!bounds(v)) return false;
  return true;
}

Poly poly_mul(const Poly& a, const Poly& b, const TruncationPolicy& policy) {
  Poly out;
  for (const auto& [m1, c1] : a.terms()) {
    if (!policy.keeps(m1)) continue;
    for (const auto& [m2, c2] : b.terms()) {
      if (!policy.keeps(m2)) continue;
      Monomial m = m1 * m2;
      if (policy.keeps(m)) out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Poly series_inverse(const Poly& u, const TruncationPolicy& policy) {
  BigRational c = u.constant_term();
  if (c == 0) throw NotAUnit("series inverse of " + u.to_string());
  // u = c*(1 - w); 1/u = (1/c) * sum_k w^k. Each w power raises the minimum
  // degree, so the caps force a tail of exact zeros.
  Poly w = policy.truncate((Poly::constant(c) - u) * (BigRational(1) / c));
  if (!policy.bounds_all(w))
    throw NonTerminating("series inverse needs caps on every variable of " + u.to_string());
  Poly sum = Poly::one();
  Poly power = Poly::one();
  while (true) {
    power = poly_mul(power, w, policy);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * (BigRational(1) / c);
}

Poly pochhammer(const Poly& base, std::optional<long> n, const TruncationPolicy& policy,
                long step) {
  Poly out = Poly::one();
  if (n) {
    if (*n < 0) throw IndexOutOfRange("negative pochhammer length");
    for (long k = 0; k < *n; ++k) {
      Poly factor = Poly::one() - base * Poly::variable(vars::q(), step * k);
      out = poly_mul(out, policy.truncate(factor), policy);
    }
    return out;
  }
  // Infinite product: once base*q^(step*k) dies under the caps it stays dead
  // for all larger k (q-degrees only grow), so the first vanishing factor
  // ends the product.
  if (policy.truncate(base).is_zero()) return out;
  if (!policy.q_cap)
    throw NonTerminating("infinite pochhammer of " + base.to_string() + " needs a q cap");
  for (long k = 0;; ++k) {
    Poly shift = policy.truncate(base * Poly::variable(vars::q(), step * k));
    if (shift.is_zero()) break;
    out = poly_mul(out, Poly::one() - shift, policy);
  }
  return out;
}

} // namespace pflab
