// Verifiers for the minor summation family: the one-sided formula and its
// block forms, the Cauchy-Binet identities, forced-column and two-sided
// variants with a marker variable z, and the bordered versions that pick up
// odd selection sizes through an extra 0th row of each kernel.

#include <array>
#include <utility>
#include <vector>

#include "pflab/variables.hpp"
#include "verify_impl.hpp"

namespace pflab::detail {

namespace {

// 2x2 minor of t on rows (i,j), columns (k,l)
template <typename R>
R minor2(const Matrix<R>& t, int i, int j, int k, int l) {
  return t.at(i, k) * t.at(j, l) - t.at(i, l) * t.at(j, k);
}

IndexSet shifted(const IndexSet& i, int by) {
  std::vector<int> elems;
  for (int v : i.elems()) elems.push_back(v + by);
  return IndexSet(elems);
}

IndexSet with_extra(const IndexSet& i, int v) {
  std::vector<int> elems = i.elems();
  elems.push_back(v);
  return IndexSet(elems);
}

Poly zpow(int e) { return Poly::variable(vars::z()).pow(static_cast<unsigned long>(e)); }

} // namespace

void verify_msf_main(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::pair<int, int>, 2> menus = {{{2, 4}, {4, 6}}};
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, big] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto tm = rand_matrix(rng, m, big);
    const auto a = rand_skew_nonsingular(rng, big);
    PfaffianMemo<BigRational> minors(a);

    // subset sum against the compact form Pf(T A tT)
    BigRational sum(0);
    for (const auto& i : all_subsets(big, m))
      sum += minors.of(i) * det(submatrix(tm, IndexSet::full(m), i));
    const BigRational compact = block_pfaffian_msf(tm, a);
    s.check(sum, compact);

    // entries of T A tT are the kernel-weighted 2x2 minor sums
    const auto q = tm * a.full() * tm.transpose();
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        BigRational acc(0);
        for (int k = 1; k <= big; ++k)
          for (int l = k + 1; l <= big; ++l) acc += a.at(k, l) * minor2(tm, i, j, k, l);
        s.check(q.at(i, j), acc);
      }

    // copfaffian block forms
    const BigRational pf = pfaffian(a);
    const BigRational inv_pf = BigRational(1) / pf;
    const auto ahat = copfaffian_matrix(a).full();
    const auto jn = Matrix<BigRational>::reversal(big);
    const auto jm = Matrix<BigRational>::reversal(m);

    Matrix<BigRational> wide(m + big, m + big);
    paste(wide, 1, m + 1, tm * jn);
    paste(wide, m + 1, 1, -(jn * tm.transpose()));
    paste(wide, m + 1, m + 1, (jn * ahat.transpose() * jn).scaled(inv_pf));
    s.check(compact, pf * pfaffian(SkewMatrix<BigRational>::from_full(wide)));

    Matrix<BigRational> flipped(m + big, m + big);
    paste(flipped, 1, m + 1, jm * tm);
    paste(flipped, m + 1, 1, -(tm.transpose() * jm));
    paste(flipped, m + 1, m + 1, ahat.scaled(inv_pf));
    s.check(compact, pf * pfaffian(SkewMatrix<BigRational>::from_full(flipped)));
  }

  // the first equality needs no Pfaffian of A and survives odd pool sizes
  for (int t = 0; t < std::max(1, p.trials / 4); ++t) {
    const int m = 2, big = 5;
    const auto tm = rand_matrix(rng, m, big);
    const auto a = rand_skew(rng, big);
    PfaffianMemo<BigRational> minors(a);
    BigRational sum(0);
    for (const auto& i : all_subsets(big, m))
      sum += minors.of(i) * det(submatrix(tm, IndexSet::full(m), i));
    s.check(sum, block_pfaffian_msf(tm, a));
  }

  // square T against the reversal kernel recovers the determinant
  for (int m : {2, 4}) {
    const auto tm = rand_matrix(rng, m, m);
    s.check(det(tm), block_pfaffian_msf(tm, k_block_matrix<BigRational>(m)));
  }
}

void verify_cauchy_binet(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::pair<int, int>, 2> menus = {{{2, 4}, {3, 5}}};
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, big] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto x = rand_matrix(rng, m, big);
    const auto y = rand_matrix(rng, m, big);
    BigRational sum(0);
    for (const auto& k : all_subsets(big, m))
      sum += det(submatrix(x, IndexSet::full(m), k)) *
             det(submatrix(y, IndexSet::full(m), k));
    s.check(sum, det(x * y.transpose()));
  }
}

void verify_cauchy_binet_gen(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::array<int, 3>, 2> menus = {{{2, 3, 4}, {3, 4, 5}}};
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, bm, bn] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto x = rand_matrix(rng, m, bm);
    const auto a = rand_matrix(rng, bm, bn);
    const auto y = rand_matrix(rng, m, bn);
    BigRational sum(0);
    for (const auto& i : all_subsets(bm, m))
      for (const auto& j : all_subsets(bn, m))
        sum += det(submatrix(a, i, j)) * det(submatrix(x, IndexSet::full(m), i)) *
               det(submatrix(y, IndexSet::full(m), j));
    s.check(sum, det(x * a * y.transpose()));
  }
}

void verify_msf2(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::array<int, 3>, 3> menus = {{{3, 1, 2}, {3, 1, 4}, {4, 2, 4}}};
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, n, big] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto tm = rand_matrix(rng, m, n + big);
    const auto a = rand_skew_nonsingular(rng, big);
    PfaffianMemo<BigRational> minors(a);

    std::vector<int> forced;
    for (int v = 1; v <= n; ++v) forced.push_back(v);

    BigRational lhs(0);
    for (const auto& i : all_subsets(big, m - n)) {
      std::vector<int> cols = forced;
      for (int v : i.elems()) cols.push_back(v + n);
      lhs += minors.of(i) * det(submatrix(tm, IndexSet::full(m), IndexSet(cols)));
    }

    std::vector<int> pool;
    for (int v = n + 1; v <= n + big; ++v) pool.push_back(v);
    const auto t_pool = submatrix(tm, IndexSet::full(m), IndexSet(pool));
    const auto t_forced = submatrix(tm, IndexSet::full(m), IndexSet(forced));
    const auto jn = Matrix<BigRational>::reversal(n);
    const auto jbig = Matrix<BigRational>::reversal(big);

    // compressed form carrying Q = T_R A tT_R
    Matrix<BigRational> one(m + n, m + n);
    paste(one, 1, 1, t_pool * a.full() * t_pool.transpose());
    paste(one, 1, m + 1, t_forced * jn);
    paste(one, m + 1, 1, -(jn * t_forced.transpose()));
    s.check(lhs, pfaffian(SkewMatrix<BigRational>::from_full(one)));

    // expanded form carrying the copfaffian block
    const BigRational pf = pfaffian(a);
    const auto ahat = copfaffian_matrix(a).full();
    Matrix<BigRational> two(m + big + n, m + big + n);
    paste(two, 1, m + 1, t_pool * jbig);
    paste(two, 1, m + big + 1, t_forced * jn);
    paste(two, m + 1, 1, -(jbig * t_pool.transpose()));
    paste(two, m + 1, m + 1,
          (jbig * ahat.transpose() * jbig).scaled(BigRational(1) / pf));
    paste(two, m + big + 1, 1, -(jn * t_forced.transpose()));
    s.check(lhs, pf * pfaffian(SkewMatrix<BigRational>::from_full(two)));
  }
}

void verify_msf3(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::pair<int, int>, 2> menus = {{{2, 2}, {2, 4}}};
  const Poly z = Poly::variable(vars::z());
  for (int t = 0; t < p.trials; ++t) {
    const auto [bm, bn] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto a = rand_skew_nonsingular(rng, bm);
    const auto b = rand_skew_nonsingular(rng, bn);
    const auto tm = rand_matrix(rng, bm, bn);
    PfaffianMemo<BigRational> am(a);
    PfaffianMemo<BigRational> bm_minors(b);

    Poly lhs = Poly::zero();
    for (int r = 0; 2 * r <= std::min(bm, bn); ++r) {
      BigRational coeff(0);
      for (const auto& i : all_subsets(bm, 2 * r))
        for (const auto& j : all_subsets(bn, 2 * r))
          coeff += am.of(i) * bm_minors.of(j) * det(submatrix(tm, i, j));
      lhs = lhs + cpoly(coeff) * zpow(2 * r);
    }

    const BigRational pfa = pfaffian(a);
    const BigRational pfb = pfaffian(b);
    const Poly inv_pfa = cpoly(BigRational(1) / pfa);
    const Poly inv_pfb = cpoly(BigRational(1) / pfb);
    const auto ahat = to_poly(copfaffian_matrix(a).full());
    const auto bhat = to_poly(copfaffian_matrix(b).full());
    const auto af = to_poly(a.full());
    const auto tp = to_poly(tm);
    const auto q = to_poly(tm * b.full() * tm.transpose());
    const auto jm = to_poly(Matrix<BigRational>::reversal(bm));
    const auto jn = to_poly(Matrix<BigRational>::reversal(bn));
    const Poly z2 = zpow(2);

    // f1: Pf(A) Pf(Ahat/Pf(A) + z^2 T B tT)
    const auto f1 = ahat.scaled(inv_pfa) + q.scaled(z2);
    s.check(lhs, cpoly(pfa) * pfaffian(SkewMatrix<Poly>::from_full(f1)));

    // f2: no Pfaffian prefactor at all
    Matrix<Poly> f2(2 * bm, 2 * bm);
    paste(f2, 1, 1, jm * af.transpose() * jm);
    paste(f2, 1, bm + 1, jm);
    paste(f2, bm + 1, 1, jm.scaled(-Poly::one()));
    paste(f2, bm + 1, bm + 1, q.scaled(z2));
    s.check(lhs, pfaffian(SkewMatrix<Poly>::from_full(f2)));

    // f3: both copfaffians, the pool side conjugated by J
    Matrix<Poly> f3(bm + bn, bm + bn);
    paste(f3, 1, 1, ahat.scaled(inv_pfa));
    paste(f3, 1, bm + 1, (tp * jn).scaled(z));
    paste(f3, bm + 1, 1, (jn * tp.transpose()).scaled(-z));
    paste(f3, bm + 1, bm + 1, (jn * bhat.transpose() * jn).scaled(inv_pfb));
    s.check(lhs, cpoly(pfa * pfb) * pfaffian(SkewMatrix<Poly>::from_full(f3)));

    // f4: the reflected layout with Bhat kept plain
    Matrix<Poly> f4(bm + bn, bm + bn);
    paste(f4, 1, 1, (jm * ahat.transpose() * jm).scaled(inv_pfa));
    paste(f4, 1, bm + 1, (jm * tp).scaled(z));
    paste(f4, bm + 1, 1, (tp.transpose() * jm).scaled(-z));
    paste(f4, bm + 1, bm + 1, bhat.scaled(inv_pfb));
    s.check(lhs, cpoly(pfa * pfb) * pfaffian(SkewMatrix<Poly>::from_full(f4)));
  }
}

namespace {

// Shared engine for the bordered two-sided summation. The kernels are
// 1-based with row/column 1 standing for the adjoined 0th index, so the
// selection subsets live in {2..M+1} and {2..N+1}. A has size M+1+pad with
// pad = 0 for odd M and pad = 1 for even M (the extra index never enters the
// sums; its Q row and column stay zero).
void bordered_sum_check(Session& s, Rand& rng, int bm, int bn) {
  const int pad = bm % 2 != 0 ? 0 : 1;
  const auto a = rand_skew_nonsingular(rng, bm + 1 + pad);
  const auto b = rand_skew(rng, bn + 1);
  const auto tm = rand_matrix(rng, bm, bn);
  PfaffianMemo<BigRational> am(a);
  PfaffianMemo<BigRational> bmem(b);

  Poly lhs = Poly::zero();
  for (int r = 0; r <= std::min(bm, bn); ++r) {
    BigRational coeff(0);
    for (const auto& i : all_subsets(bm, r))
      for (const auto& j : all_subsets(bn, r)) {
        IndexSet ai = shifted(i, 1);
        IndexSet bj = shifted(j, 1);
        if (r % 2 != 0) {
          ai = with_extra(ai, 1);
          bj = with_extra(bj, 1);
        }
        coeff += am.of(ai) * bmem.of(bj) * det(submatrix(tm, i, j));
      }
    lhs = lhs + cpoly(coeff) * zpow(r);
  }

  // Q over the bordered indices; the pad row and column stay zero
  const int d = bm + 1 + pad;
  SkewMatrix<Poly> q(d);
  for (int j = 1; j <= bm; ++j) {
    BigRational acc(0);
    for (int k = 1; k <= bn; ++k) acc += b.at(1, k + 1) * tm.at(j, k);
    q.set_upper(1, j + 1, cpoly(acc) * zpow(1));
  }
  for (int i = 1; i <= bm; ++i)
    for (int j = i + 1; j <= bm; ++j) {
      BigRational acc(0);
      for (int k = 1; k <= bn; ++k)
        for (int l = k + 1; l <= bn; ++l)
          acc += b.at(k + 1, l + 1) * minor2(tm, i, j, k, l);
      q.set_upper(i + 1, j + 1, cpoly(acc) * zpow(2));
    }

  const BigRational pfa = pfaffian(a);
  const auto ahat = copfaffian_matrix(a);
  SkewMatrix<Poly> mix(d);
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      mix.set_upper(i, j, cpoly(ahat.at(i, j) / pfa) + q.at(i, j));
  s.check(lhs, cpoly(pfa) * pfaffian(mix));
}

} // namespace

void verify_msf4_cor_odd(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) bordered_sum_check(s, rng, 3, 4);
}

void verify_msf4_cor_even(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) bordered_sum_check(s, rng, 2, 4);
}

void verify_msf4_thm(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::array<int, 4>, 2> menus = {{{2, 0, 2, 2}, {1, 1, 2, 2}}};
  const Poly z = Poly::variable(vars::z());
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, n, bm, bn] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto a = rand_skew_nonsingular(rng, bm);
    const auto b = rand_skew_nonsingular(rng, bn);
    const auto tm = rand_matrix(rng, m + bm, n + bn);
    PfaffianMemo<BigRational> am(a);
    PfaffianMemo<BigRational> bmem(b);

    std::vector<int> r0, s0, rpool, spool;
    for (int v = 1; v <= m; ++v) r0.push_back(v);
    for (int v = 1; v <= n; ++v) s0.push_back(v);
    for (int v = m + 1; v <= m + bm; ++v) rpool.push_back(v);
    for (int v = n + 1; v <= n + bn; ++v) spool.push_back(v);

    Poly lhs = Poly::zero();
    for (int r = std::max(m, n); r <= std::min(m + bm, n + bn); ++r) {
      if ((r - m) % 2 != 0) continue;
      BigRational coeff(0);
      for (const auto& i : all_subsets(bm, r - m))
        for (const auto& j : all_subsets(bn, r - n)) {
          std::vector<int> rows = r0, cols = s0;
          for (int v : i.elems()) rows.push_back(v + m);
          for (int v : j.elems()) cols.push_back(v + n);
          coeff += am.of(i) * bmem.of(j) *
                   det(submatrix(tm, IndexSet(rows), IndexSet(cols)));
        }
      lhs = lhs + cpoly(coeff) * zpow(r);
    }

    const BigRational pfa = pfaffian(a);
    const BigRational pfb = pfaffian(b);
    const auto ahat = to_poly(copfaffian_matrix(a).full()).scaled(cpoly(BigRational(1) / pfa));
    const auto bhat = to_poly(copfaffian_matrix(b).full());
    const auto jn_small = to_poly(Matrix<BigRational>::reversal(n));
    const auto jbn = to_poly(Matrix<BigRational>::reversal(bn));

    const IndexSet r0s(r0), s0s(s0), rp(rpool), sp(spool);
    const auto t_r0_s = to_poly(submatrix(tm, r0s, sp));
    const auto t_r0_s0 = to_poly(submatrix(tm, r0s, s0s));
    const auto t_r_s = to_poly(submatrix(tm, rp, sp));
    const auto t_r_s0 = to_poly(submatrix(tm, rp, s0s));

    const int d = m + bm + bn + n;
    Matrix<Poly> block(d, d);
    paste(block, 1, m + bm + 1, (t_r0_s * jbn).scaled(z));
    paste(block, 1, m + bm + bn + 1, (t_r0_s0 * jn_small).scaled(z));
    paste(block, m + 1, m + 1, ahat);
    paste(block, m + 1, m + bm + 1, (t_r_s * jbn).scaled(z));
    paste(block, m + 1, m + bm + bn + 1, (t_r_s0 * jn_small).scaled(z));
    paste(block, m + bm + 1, 1, (jbn * t_r0_s.transpose()).scaled(-z));
    paste(block, m + bm + 1, m + 1, (jbn * t_r_s.transpose()).scaled(-z));
    paste(block, m + bm + 1, m + bm + 1,
          (jbn * bhat.transpose() * jbn).scaled(cpoly(BigRational(1) / pfb)));
    paste(block, m + bm + bn + 1, 1, (jn_small * t_r0_s0.transpose()).scaled(-z));
    paste(block, m + bm + bn + 1, m + 1, (jn_small * t_r_s0.transpose()).scaled(-z));
    s.check(lhs,
            cpoly(pfa * pfb) * pfaffian(SkewMatrix<Poly>::from_full(block)));
  }
}

void verify_msf4_augmented(Session& s, const IdentityParams& p, Rand& rng) {
  // (m, n, M, N); odd and even M alternate
  const std::array<std::array<int, 4>, 2> menus = {{{1, 1, 3, 4}, {1, 1, 2, 4}}};
  const Poly z = Poly::variable(vars::z());
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, n, bm, bn] = menus[static_cast<std::size_t>(t) % menus.size()];
    const int pad = bm % 2 != 0 ? 0 : 1; // even M pads A with one dead index
    const int da = bm + 1 + pad;         // bordered A size
    const int border = da;               // the adjoined index of A
    const auto a = rand_skew_nonsingular(rng, da);
    const auto b = rand_skew(rng, bn + 1);
    const auto tm = rand_matrix(rng, m + bm, n + bn);
    PfaffianMemo<BigRational> am(a);
    PfaffianMemo<BigRational> bmem(b);

    std::vector<int> r0, s0;
    for (int v = 1; v <= m; ++v) r0.push_back(v);
    for (int v = 1; v <= n; ++v) s0.push_back(v);

    Poly lhs = Poly::zero();
    for (int r = std::max(m, n); r <= std::min(m + bm, n + bn); ++r) {
      BigRational coeff(0);
      for (const auto& i : all_subsets(bm, r - m))
        for (const auto& j : all_subsets(bn, r - n)) {
          IndexSet ai = i;
          IndexSet bj = j;
          if ((r - m) % 2 != 0) {
            ai = with_extra(ai, border);
            bj = with_extra(bj, bn + 1);
          }
          std::vector<int> rows = r0, cols = s0;
          for (int v : i.elems()) rows.push_back(v + m);
          for (int v : j.elems()) cols.push_back(v + n);
          coeff += am.of(ai) * bmem.of(bj) *
                   det(submatrix(tm, IndexSet(rows), IndexSet(cols)));
        }
      lhs = lhs + cpoly(coeff) * zpow(r);
    }

    // rows/columns of T shifted into the pools
    const auto tpool = [&](int i, int k) { return tm.at(m + i, n + k); };

    // Q11 (m x m), Q12 (m x da), Q22 (da x da)
    Matrix<Poly> q12(m, da);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= bm; ++j) {
        BigRational acc(0);
        for (int k = 1; k <= bn; ++k)
          for (int l = k + 1; l <= bn; ++l)
            acc += b.at(k, l) *
                   (tm.at(i, n + k) * tpool(j, l) - tm.at(i, n + l) * tpool(j, k));
        q12.set(i, j, cpoly(acc) * zpow(2));
      }
      BigRational acc(0);
      for (int k = 1; k <= bn; ++k) acc += b.at(k, bn + 1) * tm.at(i, n + k);
      q12.set(i, border, cpoly(acc) * zpow(1));
    }

    SkewMatrix<Poly> q11(m);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        BigRational acc(0);
        for (int k = 1; k <= bn; ++k)
          for (int l = k + 1; l <= bn; ++l)
            acc += b.at(k, l) *
                   (tm.at(i, n + k) * tm.at(j, n + l) - tm.at(i, n + l) * tm.at(j, n + k));
        q11.set_upper(i, j, cpoly(acc) * zpow(2));
      }

    SkewMatrix<Poly> q22(da);
    for (int i = 1; i <= bm; ++i) {
      for (int j = i + 1; j <= bm; ++j) {
        BigRational acc(0);
        for (int k = 1; k <= bn; ++k)
          for (int l = k + 1; l <= bn; ++l)
            acc += b.at(k, l) * (tpool(i, k) * tpool(j, l) - tpool(i, l) * tpool(j, k));
        q22.set_upper(i, j, cpoly(acc) * zpow(2));
      }
      BigRational acc(0);
      for (int k = 1; k <= bn; ++k) acc += b.at(k, bn + 1) * tpool(i, k);
      q22.set_upper(i, border, cpoly(acc) * zpow(1));
    }

    const BigRational pfa = pfaffian(a);
    const auto ahat = copfaffian_matrix(a);
    SkewMatrix<Poly> mix(da);
    for (int i = 1; i <= da; ++i)
      for (int j = i + 1; j <= da; ++j)
        mix.set_upper(i, j, cpoly(ahat.at(i, j) / pfa) + q22.at(i, j));

    // T-bar: pool rows over the forced columns, padded with zero rows
    Matrix<Poly> tbar(da, n);
    for (int i = 1; i <= bm; ++i)
      for (int j = 1; j <= n; ++j) tbar.set(i, j, cpoly(tm.at(m + i, j)));
    Matrix<Poly> t00(m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) t00.set(i, j, cpoly(tm.at(i, j)));

    const auto jn_small = to_poly(Matrix<BigRational>::reversal(n));
    const int d = m + da + n;
    Matrix<Poly> block(d, d);
    paste(block, 1, 1, q11.full());
    paste(block, 1, m + 1, q12);
    paste(block, 1, m + da + 1, (t00 * jn_small).scaled(z));
    paste(block, m + 1, 1, q12.transpose().scaled(-Poly::one()));
    paste(block, m + 1, m + 1, mix.full());
    paste(block, m + 1, m + da + 1, (tbar * jn_small).scaled(z));
    paste(block, m + da + 1, 1, (jn_small * t00.transpose()).scaled(-z));
    paste(block, m + da + 1, m + 1, (jn_small * tbar.transpose()).scaled(-z));
    s.check(lhs, cpoly(pfa) * pfaffian(SkewMatrix<Poly>::from_full(block)));
  }
}

} // namespace pflab::detail
