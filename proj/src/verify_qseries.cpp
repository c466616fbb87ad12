// Verifiers for truncated q-series identities and exact hook length
// products: the q-binomial sum, two bilinear kernels with closed product
// forms, hook ratio factorizations over staircase shifted parts, two
// Littlewood type Schur function sums, and the polynomial lemmas that
// evaluate a Pfaffian and a determinant with free parameters.

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "pflab/linalg.hpp"
#include "pflab/partitions.hpp"
#include "pflab/series.hpp"
#include "pflab/symfun.hpp"
#include "pflab/variables.hpp"
#include "verify_impl.hpp"

namespace pflab::detail {

namespace {

Poly qp(long e) {
  return e == 0 ? Poly::one() : Poly::variable(vars::q(), e);
}

Poly neg(const Poly& f) { return Poly::zero() - f; }

Poly ppow(const Poly& f, long e) {
  return e == 0 ? Poly::one() : f.pow(static_cast<unsigned long>(e));
}

// Exact finite product (base*var^0, ..., base*var^(m-1) each subtracted
// from one); the series variable is explicit so shifted bases work too.
Poly poch_in(const Poly& base, const Poly& var, long m) {
  Poly r = Poly::one();
  for (long k = 0; k < m; ++k) r = r * (Poly::one() - base * ppow(var, k));
  return r;
}

// (-q;q)_m / (q;q)_m as a truncated series.
Poly unit_ratio(long m, const TruncationPolicy& pol) {
  return poly_mul(pochhammer(neg(qp(1)), m, pol),
                  series_inverse(pochhammer(qp(1), m, pol), pol), pol);
}

// prod over cells of (1+q^h)/(1-q^h), truncated.
Poly hook_ratio(const Partition& lam, const TruncationPolicy& pol) {
  Poly r = Poly::one();
  for (auto [i, j] : lam.cells()) {
    long h = hook(lam, i, j);
    r = poly_mul(r, Poly::one() + qp(h), pol);
    r = poly_mul(r, series_inverse(Poly::one() - qp(h), pol), pol);
  }
  return r;
}

}  // namespace

void verify_q_binomial(Session& s, const IdentityParams& p, Rand& rng) {
  (void)rng;
  const Poly q = qp(1);
  const Poly a = Poly::variable(vars::a());
  const Poly x = Poly::variable(vars::x(1));
  const auto pol = TruncationPolicy::caps(p.q_cap, {{{vars::x(1)}, p.x_cap}});

  Poly lhs = Poly::zero();
  for (long k = 0; k <= p.x_cap; ++k) {
    Poly term = poly_mul(pochhammer(a, k, pol),
                         series_inverse(pochhammer(q, k, pol), pol), pol);
    lhs = lhs + poly_mul(term, ppow(x, k), pol);
  }
  Poly rhs = poly_mul(pochhammer(poly_mul(a, x, pol), std::nullopt, pol),
                      series_inverse(pochhammer(x, std::nullopt, pol), pol), pol);
  s.check(pol.truncate(lhs), pol.truncate(rhs));

  // a = 0 degenerates to the Euler sum with the same truncation.
  s.check(lhs.substitute(vars::a(), Poly::zero()),
          rhs.substitute(vars::a(), Poly::zero()));
}

void verify_q_kernel(Session& s, const IdentityParams& p, Rand& rng) {
  (void)rng;
  const Poly q = qp(1);
  const Poly x = Poly::variable(vars::x(1));
  const Poly y = Poly::variable(vars::y(1));
  const auto pol = TruncationPolicy::caps(
      p.q_cap, {{{vars::x(1)}, p.x_cap}, {{vars::y(1)}, p.y_cap}});
  const long top = std::max(p.x_cap, p.y_cap);

  // Denominator free form of the antisymmetric factor, exact in q.
  for (long k = 0; k <= top; ++k)
    for (long l = 0; l <= top; ++l) {
      if (k == l) continue;
      long d = std::labs(k - l);
      Poly cleared = (qp(d) - Poly::one()) * (qp(k) + qp(l));
      if (k > l) cleared = neg(cleared);
      s.check((qp(l) - qp(k)) * (Poly::one() + qp(d)), cleared);
    }

  std::vector<Poly> c;
  for (long k = 0; k <= top; ++k) c.push_back(unit_ratio(k, pol));

  Poly lhs = Poly::zero();
  for (long k = 0; k <= p.x_cap; ++k)
    for (long l = 0; l <= p.y_cap; ++l) {
      if (k == l) continue;
      long d = std::labs(k - l);
      Poly f = poly_mul(qp(d) - Poly::one(),
                        series_inverse(Poly::one() + qp(d), pol), pol);
      if (k > l) f = neg(f);
      Poly term = poly_mul(c[static_cast<std::size_t>(k)],
                           c[static_cast<std::size_t>(l)], pol);
      term = poly_mul(term, f, pol);
      lhs = lhs + poly_mul(term, ppow(x, k) * ppow(y, l), pol);
    }

  Poly rhs = pochhammer(neg(poly_mul(q, x, pol)), std::nullopt, pol);
  rhs = poly_mul(rhs, series_inverse(pochhammer(x, std::nullopt, pol), pol), pol);
  rhs = poly_mul(rhs, pochhammer(neg(poly_mul(q, y, pol)), std::nullopt, pol), pol);
  rhs = poly_mul(rhs, series_inverse(pochhammer(y, std::nullopt, pol), pol), pol);
  rhs = poly_mul(rhs, x - y, pol);
  rhs = poly_mul(rhs, series_inverse(Poly::one() - poly_mul(x, y, pol), pol), pol);
  s.check(pol.truncate(lhs), pol.truncate(rhs));

  // Single variable slice: the y = 0 column has a one step shifted ratio.
  Poly slice = Poly::zero();
  for (long k = 1; k <= p.x_cap; ++k)
    slice = slice + poly_mul(c[static_cast<std::size_t>(k - 1)], ppow(x, k), pol);
  Poly closed = poly_mul(x, pochhammer(neg(poly_mul(q, x, pol)), std::nullopt, pol), pol);
  closed = poly_mul(closed, series_inverse(pochhammer(x, std::nullopt, pol), pol), pol);
  s.check(pol.truncate(slice), pol.truncate(closed));

  // Diagonal difference recurrence, cleared of all denominators.
  for (long k = 1; k <= 4; ++k)
    for (long l = 1; l <= 4; ++l) {
      if (k == l) continue;
      Poly mqk = poch_in(neg(q), q, k), mql = poch_in(neg(q), q, l);
      Poly mqk1 = poch_in(neg(q), q, k - 1), mql1 = poch_in(neg(q), q, l - 1);
      Poly low = qp(k - 1) + qp(l - 1), high = qp(k) + qp(l);
      Poly lhs2 = mqk * mql * (qp(l) - qp(k)) * low -
                  mqk1 * mql1 * (Poly::one() - qp(k)) * (Poly::one() - qp(l)) *
                      (qp(l - 1) - qp(k - 1)) * high;
      Poly rhs2 = cpoly(2) * (qp(l) - qp(k)) * mqk1 * mql1 * high * low;
      s.check(lhs2, rhs2);
    }
}

void verify_q_kernel_sq(Session& s, const IdentityParams& p, Rand& rng) {
  (void)rng;
  const Poly q = qp(1);
  const Poly x = Poly::variable(vars::x(1));
  const Poly y = Poly::variable(vars::y(1));
  const auto pol = TruncationPolicy::caps(
      p.q_cap, {{{vars::x(1)}, p.x_cap}, {{vars::y(1)}, p.y_cap}});
  const long top = std::max(p.x_cap, p.y_cap);

  // (-q^2;q^2)_k / (q^2;q^2)_k.
  std::vector<Poly> c;
  for (long k = 0; k <= top; ++k)
    c.push_back(poly_mul(pochhammer(neg(qp(2)), k, pol, 2),
                         series_inverse(pochhammer(qp(2), k, pol, 2), pol), pol));

  auto weight = [&](long k, long l) {
    long d = std::labs(k - l);
    return poly_mul(cpoly(2) * qp(d),
                    series_inverse(Poly::one() + qp(2 * d), pol), pol);
  };

  Poly lhs = Poly::zero();
  for (long k = 0; k <= p.x_cap; ++k)
    for (long l = 0; l <= p.y_cap; ++l) {
      Poly term = poly_mul(c[static_cast<std::size_t>(k)],
                           c[static_cast<std::size_t>(l)], pol);
      term = poly_mul(term, weight(k, l), pol);
      lhs = lhs + poly_mul(term, ppow(x, k) * ppow(y, l), pol);
    }

  Poly wall = pochhammer(neg(poly_mul(q, x, pol)), std::nullopt, pol, 2);
  wall = poly_mul(wall, series_inverse(pochhammer(poly_mul(q, x, pol), std::nullopt, pol, 2), pol), pol);
  wall = poly_mul(wall, pochhammer(neg(poly_mul(q, y, pol)), std::nullopt, pol, 2), pol);
  wall = poly_mul(wall, series_inverse(pochhammer(poly_mul(q, y, pol), std::nullopt, pol, 2), pol), pol);
  Poly rhs = poly_mul(wall, series_inverse(Poly::one() - poly_mul(x, y, pol), pol), pol);
  s.check(pol.truncate(lhs), pol.truncate(rhs));

  // Clearing the Cauchy factor leaves a product of two one variable sums.
  Poly expanded = Poly::zero();
  for (long k = 0; k <= p.x_cap; ++k)
    for (long l = 0; l <= p.y_cap; ++l) {
      Poly term = poly_mul(pochhammer(cpoly(-1), k, pol, 2),
                           series_inverse(pochhammer(qp(2), k, pol, 2), pol), pol);
      term = poly_mul(term, pochhammer(cpoly(-1), l, pol, 2), pol);
      term = poly_mul(term, series_inverse(pochhammer(qp(2), l, pol, 2), pol), pol);
      expanded = expanded + poly_mul(term, qp(k + l) * ppow(x, k) * ppow(y, l), pol);
    }
  s.check(pol.truncate(wall), pol.truncate(expanded));

  // Low coefficients of the sum against their closed forms.
  Poly a10 = poly_mul(c[1], weight(1, 0), pol);
  s.check(a10, poly_mul(cpoly(2) * q, series_inverse(Poly::one() - qp(2), pol), pol));
  Poly a11 = poly_mul(poly_mul(c[1], c[1], pol), weight(1, 1), pol);
  Poly sq = poly_mul(Poly::one() + qp(2),
                     series_inverse(Poly::one() - qp(2), pol), pol);
  s.check(a11, poly_mul(sq, sq, pol));
}

void verify_q_key_id(Session& s, const IdentityParams& p, Rand& rng) {
  (void)p;
  (void)rng;
  const Poly q = qp(1);
  for (const auto& lam : enumerate_partitions(8)) {
    for (int n = lam.length(); n <= lam.length() + 1; ++n) {
      std::vector<long> ell;
      for (int i = 1; i <= n; ++i) ell.push_back(lam.part(i) + n - i);

      Poly hook_plus = Poly::one(), hook_minus = Poly::one();
      for (auto [i, j] : lam.cells()) {
        long h = hook(lam, i, j);
        hook_plus = hook_plus * (Poly::one() + qp(h));
        hook_minus = hook_minus * (Poly::one() - qp(h));
      }
      Poly stair_plus = Poly::one(), stair_minus = Poly::one();
      Poly gap_plus = Poly::one(), gap_minus = Poly::one();
      for (int i = 0; i < n; ++i) {
        stair_plus = stair_plus * poch_in(neg(q), q, ell[static_cast<std::size_t>(i)]);
        stair_minus = stair_minus * poch_in(q, q, ell[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
          long d = ell[static_cast<std::size_t>(i)] - ell[static_cast<std::size_t>(j)];
          gap_plus = gap_plus * (Poly::one() + qp(d));
          gap_minus = gap_minus * (Poly::one() - qp(d));
        }
      }
      // Cross multiplied ratio of the two factorizations.
      s.check(hook_plus * stair_minus * gap_plus,
              hook_minus * stair_plus * gap_minus);
    }
  }
}

void verify_q_macd(Session& s, const IdentityParams& p, Rand& rng) {
  (void)p;
  (void)rng;
  const Poly q = qp(1);
  for (const auto& lam : enumerate_partitions(8)) {
    for (int n = lam.length(); n <= lam.length() + 1; ++n) {
      std::vector<long> ell;
      for (int i = 1; i <= n; ++i) ell.push_back(lam.part(i) + n - i);

      Poly hook_plus = Poly::one(), hook_minus = Poly::one();
      for (auto [i, j] : lam.cells()) {
        long h = hook(lam, i, j);
        hook_plus = hook_plus * (Poly::one() + qp(h));
        hook_minus = hook_minus * (Poly::one() - qp(h));
      }
      Poly stair_plus = Poly::one(), stair_minus = Poly::one();
      Poly gap_plus = Poly::one(), gap_minus = Poly::one();
      for (int i = 0; i < n; ++i) {
        stair_plus = stair_plus * poch_in(neg(q), q, ell[static_cast<std::size_t>(i)]);
        stair_minus = stair_minus * poch_in(q, q, ell[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
          long d = ell[static_cast<std::size_t>(i)] - ell[static_cast<std::size_t>(j)];
          gap_plus = gap_plus * (Poly::one() + qp(d));
          gap_minus = gap_minus * (Poly::one() - qp(d));
        }
      }
      s.check(hook_minus * gap_minus, stair_minus);
      s.check(hook_plus * gap_plus, stair_plus);
    }
  }
}

void verify_kawanaka(Session& s, const IdentityParams& p, Rand& rng) {
  (void)rng;
  const Poly q = qp(1);
  for (int n = 1; n <= p.n; ++n) {
    const VarBlock xb = vars::x_block(n);
    const auto pol = TruncationPolicy::caps(p.q_cap, {{xb, p.x_cap}});

    Poly lhs = Poly::zero();
    for (const auto& lam : enumerate_partitions(p.x_cap, -1, n))
      lhs = lhs + poly_mul(hook_ratio(lam, pol), schur(lam, xb), pol);

    Poly rhs = Poly::one();
    for (int i = 0; i < n; ++i) {
      Poly xi = Poly::variable(xb[static_cast<std::size_t>(i)]);
      rhs = poly_mul(rhs, pochhammer(neg(poly_mul(xi, q, pol)), std::nullopt, pol), pol);
      rhs = poly_mul(rhs, series_inverse(pochhammer(xi, std::nullopt, pol), pol), pol);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly xi = Poly::variable(xb[static_cast<std::size_t>(i)]);
        Poly xj = Poly::variable(xb[static_cast<std::size_t>(j)]);
        rhs = poly_mul(rhs, series_inverse(Poly::one() - xi * xj, pol), pol);
      }
    s.check(pol.truncate(lhs), pol.truncate(rhs));
  }
}

void verify_ours(Session& s, const IdentityParams& p, Rand& rng) {
  (void)rng;
  const Poly q = qp(1);
  const Poly a = Poly::variable(vars::a());
  const int n_top = std::min(p.n, 3);
  for (int n = 1; n <= n_top; ++n) {
    const VarBlock xb = vars::x_block(n);
    const auto pol = TruncationPolicy::caps(p.q_cap, {{xb, p.x_cap}});

    Poly lhs = Poly::zero();
    for (const auto& lam : enumerate_partitions(p.x_cap, -1, n)) {
      Poly term = qp(n_stat(lam));
      for (int i = 1; i <= n; ++i)
        term = poly_mul(term, pochhammer(a, lam.part(i) + n - i, pol), pol);
      for (auto [i, j] : lam.cells())
        term = poly_mul(term, series_inverse(Poly::one() - qp(hook(lam, i, j)), pol), pol);
      lhs = lhs + poly_mul(term, schur(lam, xb), pol);
    }

    Poly rhs = Poly::one();
    for (int i = 1; i < n; ++i) rhs = poly_mul(rhs, pochhammer(a, i, pol), pol);
    for (int i = 0; i < n; ++i) {
      Poly xi = Poly::variable(xb[static_cast<std::size_t>(i)]);
      rhs = poly_mul(rhs, pochhammer(a * qp(n - 1) * xi, std::nullopt, pol), pol);
      rhs = poly_mul(rhs, series_inverse(pochhammer(xi, std::nullopt, pol), pol), pol);
    }
    s.check(pol.truncate(lhs), pol.truncate(rhs));
  }
}

namespace {

// One summand of the two parameter kernel polynomial: staircase factors
// below nu use the bare series variable, the rest carry the free parameter.
Poly gh_head(long nu, long n, const Poly& u, const Poly& qq, const Poly& aa) {
  Poly r = Poly::one();
  for (long k = 1; k <= nu - 1; ++k)
    r = r * (Poly::one() - ppow(qq, k - 1) * u);
  for (long k = nu; k <= n - 1; ++k)
    r = r * (Poly::one() - aa * ppow(qq, k - 1) * u);
  return r;
}

Poly gh_poly(long n, const Poly& x, const Poly& y, const Poly& qq,
             const Poly& aa, const Poly& tt, const Poly& bb) {
  Poly acc = Poly::zero();
  for (long nu = 1; nu <= n / 2; ++nu)
    acc = acc + gh_head(nu, n, x, qq, aa) * gh_head(n - nu + 1, n, y, tt, bb) -
          gh_head(n - nu + 1, n, x, qq, aa) * gh_head(nu, n, y, tt, bb);
  return acc;
}

}  // namespace

void verify_gh_lemmas(Session& s, const IdentityParams& p, Rand& rng) {
  (void)p;
  (void)rng;
  const Poly q = qp(1);
  const Poly a = Poly::variable(vars::a());
  const Poly t = Poly::variable(vars::t());
  const Poly b = Poly::variable(vars::b());
  const Poly x = Poly::variable(vars::x(1));
  const Poly y = Poly::variable(vars::y(1));

  for (long n : {2L, 4L}) {
    const long shift = n * (n - 1) * (n - 2) / 6;
    Poly g = gh_poly(n, x, y, q, a, q, a);
    Poly h = gh_poly(n, x, y, q, a, t, b);

    // Both kernels flip sign under swapping the two points.
    s.check(gh_poly(n, y, x, q, a, q, a), neg(g));
    s.check(h.substitute(vars::t(), q).substitute(vars::b(), a), g);

    // Pfaffian over symbolic points factors into a Vandermonde product.
    const VarBlock xb = vars::x_block(static_cast<int>(n));
    SkewMatrix<Poly> m(static_cast<int>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        m.set_upper(i, j,
                    gh_poly(n, Poly::variable(xb[static_cast<std::size_t>(i - 1)]),
                            Poly::variable(xb[static_cast<std::size_t>(j - 1)]), q, a,
                            q, a));
    Poly expect = qp(shift);
    for (long k = 1; k <= n - 1; ++k) expect = expect * poch_in(a, q, k);
    s.check(pfaffian(m), expect * vandermonde(xb));

    // The coefficient array on descending powers is itself skew, and its
    // Pfaffian carries the constant of the factorization.
    Matrix<Poly> cg(static_cast<int>(n), static_cast<int>(n));
    Matrix<Poly> ch(static_cast<int>(n), static_cast<int>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        cg.set(i, j, g.coefficient_of(vars::x(1), n - i).coefficient_of(vars::y(1), n - j));
        ch.set(i, j, h.coefficient_of(vars::x(1), n - i).coefficient_of(vars::y(1), n - j));
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) s.check(cg.at(i, j), neg(cg.at(j, i)));
    SkewMatrix<Poly> cgs(static_cast<int>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) cgs.set_upper(i, j, cg.at(i, j));
    Poly cexpect = qp(shift);
    for (long k = 1; k <= n - 1; ++k) cexpect = cexpect * poch_in(a, q, k);
    s.check(pfaffian(cgs), cexpect);

    // Determinant of the two parameter array splits the parameters.
    Poly dexpect = qp(shift) * ppow(t, shift);
    for (long k = 1; k <= n - 1; ++k)
      dexpect = dexpect * poch_in(a, q, k) * poch_in(b, t, k);
    s.check(det(ch), dexpect);
  }
}

}  // namespace pflab::detail
