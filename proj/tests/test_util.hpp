#pragma once

#include <cstdint>
#include <vector>

#include "pflab/matrix.hpp"
#include "pflab/poly.hpp"

namespace pflab::testutil {

// Deterministic across platforms and standard libraries (std::uniform_*
// distributions are not), so frozen expectations and golden files stay byte
// stable everywhere.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] by rejection; exact, no modulo bias.
  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }
};

inline Poly random_poly(Rng& rng, const std::vector<VarId>& pool, int max_terms, long max_exp,
                        long coeff_bound) {
  Poly p;
  int terms = static_cast<int>(rng.range(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (VarId v : pool) {
      long e = rng.range(0, max_exp);
      if (e > 0) m = m * Monomial::var(v, e);
    }
    p.add_term(m, BigRational(rng.range(-coeff_bound, coeff_bound)));
  }
  return p;
}

inline Matrix<BigRational> random_matrix(Rng& rng, int rows, int cols, long bound) {
  Matrix<BigRational> m(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.set(i, j, BigRational(rng.range(-bound, bound)));
  return m;
}

inline SkewMatrix<BigRational> random_skew(Rng& rng, int n, long bound) {
  SkewMatrix<BigRational> a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a.set_upper(i, j, BigRational(rng.range(-bound, bound)));
  return a;
}

// Exchange two variables everywhere in p (a simultaneous substitution).
inline Poly swap_vars(const Poly& p, VarId u, VarId v) {
  Poly out;
  for (const auto& [mono, coeff] : p.terms()) {
    const long eu = mono.exponent(u);
    const long ev = mono.exponent(v);
    Monomial swapped = mono.without(u).without(v) * Monomial::var(u, ev) *
                       Monomial::var(v, eu);
    out.add_term(swapped, coeff);
  }
  return out;
}

} // namespace pflab::testutil
