// Verifiers over weighted acyclic digraphs: the signed tuple sum against the
// path matrix determinant, and the lattice forms of the minor summation
// family where the kernel minors weight nonintersecting path tuples.

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "pflab/lattice.hpp"
#include "pflab/symfun.hpp"
#include "pflab/variables.hpp"
#include "verify_impl.hpp"

namespace pflab::detail {

namespace {

Matrix<Poly> path_matrix(const WeightedDag& d, const std::vector<int>& u,
                         const std::vector<int>& v) {
  Matrix<Poly> h(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      h.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, d.path_gf(u[i], v[j]));
  return h;
}

std::vector<int> pick_vertices(const IndexSet& which, const std::vector<int>& pool) {
  std::vector<int> out;
  for (int k : which.elems()) out.push_back(pool[static_cast<std::size_t>(k - 1)]);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> sample_vertices(Rand& rng, int n, int m) {
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 1);
  for (int i = 0; i < m; ++i) {
    const long j = rng.range(i, n - 1);
    std::swap(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
  }
  verts.resize(static_cast<std::size_t>(m));
  return verts;
}

} // namespace

void verify_lgv_lemma(Session& s, const IdentityParams& p, Rand& rng) {
  // random DAGs with edges oriented upward, so acyclic by construction
  for (int trial = 0; trial < p.trials; ++trial) {
    const int n = static_cast<int>(rng.range(4, 8));
    WeightedDag d(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (rng.range(0, 9) >= 4) continue;
        Poly w = Poly::one();
        const long pick = rng.range(0, 4);
        if (pick > 0) w = Poly::variable(vars::x(static_cast<int>(pick)));
        d.add_edge(i, j, w);
      }
    const int m = static_cast<int>(rng.range(1, 3));
    const std::vector<int> u = sample_vertices(rng, n, m);
    const std::vector<int> v = sample_vertices(rng, n, m);
    s.check(signed_gf(d, u, v), det(path_matrix(d, u, v)));
  }

  // with compatible endpoints only the identity pairing survives
  GridDag g = grid_dag(4, 3);
  const std::vector<int> u = {g.at(1, 1), g.at(2, 1)};
  for (int c1 = 1; c1 <= 4; ++c1)
    for (int c2 = c1 + 1; c2 <= 4; ++c2) {
      const std::vector<int> v = {g.at(c1, 3), g.at(c2, 3)};
      if (!is_compatible(g.dag, u, v)) continue;
      s.check(nonintersecting_gf(g.dag, u, v), det(path_matrix(g.dag, u, v)));
    }
}

void verify_lgv_msf(Session& s, const IdentityParams& p, Rand& rng) {
  const int m = 2;
  const int big_n = 4;
  GridDag g = grid_dag(4, 3);
  const std::vector<int> u = {g.at(1, 1), g.at(2, 1)};
  std::vector<int> pool;
  for (int c = 1; c <= big_n; ++c) pool.push_back(g.at(c, 3));

  const int rounds = std::max(1, p.trials / 4);
  for (int trial = 0; trial < rounds; ++trial) {
    const SkewMatrix<BigRational> a = rand_skew_nonsingular(rng, big_n);
    const BigRational pf = pfaffian(a);

    Poly lhs;
    for (const IndexSet& sel : all_subsets(big_n, m))
      lhs += cpoly(pf_minor(a, sel)) *
             nonintersecting_gf(g.dag, u, pick_vertices(sel, pool));

    const Matrix<Poly> h = path_matrix(g.dag, u, pool);
    const Matrix<Poly> jn = Matrix<Poly>::reversal(big_n);
    const SkewMatrix<BigRational> ahat = copfaffian_matrix(a);
    Matrix<Poly> block(m + big_n, m + big_n);
    paste(block, 1, m + 1, h * jn);
    paste(block, m + 1, 1, (h * jn).transpose().scaled(-Poly::one()));
    paste(block, m + 1, m + 1,
          (jn * to_poly(ahat.full()).transpose() * jn)
              .scaled(cpoly(BigRational(1) / pf)));
    s.check(lhs, cpoly(pf) * pfaffian(SkewMatrix<Poly>::from_full(block)));

    // permuted sources swap in through the signed tuple sum
    const std::vector<int> uswap = {u[1], u[0]};
    Poly lhs_signed;
    for (const IndexSet& sel : all_subsets(big_n, m))
      lhs_signed += cpoly(pf_minor(a, sel)) *
                    signed_gf(g.dag, uswap, pick_vertices(sel, pool));
    const Matrix<Poly> hswap = path_matrix(g.dag, uswap, pool);
    Matrix<Poly> bswap(m + big_n, m + big_n);
    paste(bswap, 1, m + 1, hswap * jn);
    paste(bswap, m + 1, 1, (hswap * jn).transpose().scaled(-Poly::one()));
    paste(bswap, m + 1, m + 1,
          (jn * to_poly(ahat.full()).transpose() * jn)
              .scaled(cpoly(BigRational(1) / pf)));
    s.check(lhs_signed, cpoly(pf) * pfaffian(SkewMatrix<Poly>::from_full(bswap)));
  }
}

void verify_lgv_msf2(Session& s, const IdentityParams& p, Rand& rng) {
  const int rounds = std::max(1, p.trials / 4);
  for (const auto& [m, n, big_n] :
       {std::tuple<int, int, int>{3, 1, 2}, std::tuple<int, int, int>{3, 1, 4}}) {
    GridDag g = grid_dag(n + big_n, 3);
    std::vector<int> u;
    for (int c = 1; c <= m; ++c) u.push_back(g.at(c, 1));
    std::vector<int> forced;
    for (int c = 1; c <= n; ++c) forced.push_back(g.at(c, 3));
    std::vector<int> pool;
    for (int c = n + 1; c <= n + big_n; ++c) pool.push_back(g.at(c, 3));

    for (int trial = 0; trial < rounds; ++trial) {
      const SkewMatrix<BigRational> a = rand_skew_nonsingular(rng, big_n);
      const BigRational pf = pfaffian(a);

      Poly lhs;
      for (const IndexSet& sel : all_subsets(big_n, m - n))
        lhs += cpoly(pf_minor(a, sel)) *
               nonintersecting_gf(g.dag, u, concat(forced, pick_vertices(sel, pool)));

      const Matrix<Poly> hs = path_matrix(g.dag, u, pool);
      const Matrix<Poly> h0 = path_matrix(g.dag, u, forced);
      const Matrix<Poly> jn = Matrix<Poly>::reversal(big_n);
      const Matrix<Poly> jsmall = Matrix<Poly>::reversal(n);
      const SkewMatrix<BigRational> ahat = copfaffian_matrix(a);

      const int total = m + big_n + n;
      Matrix<Poly> block(total, total);
      paste(block, 1, m + 1, hs * jn);
      paste(block, 1, m + big_n + 1, h0 * jsmall);
      paste(block, m + 1, 1, (hs * jn).transpose().scaled(-Poly::one()));
      paste(block, m + 1, m + 1,
            (jn * to_poly(ahat.full()).transpose() * jn)
                .scaled(cpoly(BigRational(1) / pf)));
      paste(block, m + big_n + 1, 1, (h0 * jsmall).transpose().scaled(-Poly::one()));
      s.check(lhs, cpoly(pf) * pfaffian(SkewMatrix<Poly>::from_full(block)));
    }
  }
}

void verify_lgv_msf3(Session& s, const IdentityParams& p, Rand& rng) {
  const Poly z = Poly::variable(vars::z());
  const int rounds = std::max(1, p.trials / 4);
  for (const auto& [big_m, big_n] : {std::pair<int, int>{2, 2}, {2, 4}}) {
    GridDag g = grid_dag(std::max(big_m, big_n), 3);
    std::vector<int> rpool;
    for (int c = 1; c <= big_m; ++c) rpool.push_back(g.at(c, 1));
    std::vector<int> spool;
    for (int c = 1; c <= big_n; ++c) spool.push_back(g.at(c, 3));

    for (int trial = 0; trial < rounds; ++trial) {
      const SkewMatrix<BigRational> a = rand_skew_nonsingular(rng, big_m);
      const SkewMatrix<BigRational> b = rand_skew_nonsingular(rng, big_n);
      const BigRational pfa = pfaffian(a);
      const BigRational pfb = pfaffian(b);

      Poly lhs;
      for (int r = 0; r <= std::min(big_m, big_n); r += 2) {
        Poly inner;
        for (const IndexSet& si : all_subsets(big_m, r))
          for (const IndexSet& sj : all_subsets(big_n, r))
            inner += cpoly(pf_minor(a, si) * pf_minor(b, sj)) *
                     nonintersecting_gf(g.dag, pick_vertices(si, rpool),
                                        pick_vertices(sj, spool));
        lhs += z.pow(static_cast<unsigned long>(r)) * inner;
      }

      const Matrix<Poly> h = path_matrix(g.dag, rpool, spool);
      const Matrix<Poly> jn = Matrix<Poly>::reversal(big_n);
      const SkewMatrix<BigRational> ahat = copfaffian_matrix(a);
      const SkewMatrix<BigRational> bhat = copfaffian_matrix(b);

      const int total = big_m + big_n;
      Matrix<Poly> block(total, total);
      paste(block, 1, 1, to_poly(ahat.full()).scaled(cpoly(BigRational(1) / pfa)));
      paste(block, 1, big_m + 1, (h * jn).scaled(z));
      paste(block, big_m + 1, 1, (h * jn).transpose().scaled(-z));
      paste(block, big_m + 1, big_m + 1,
            (jn * to_poly(bhat.full()).transpose() * jn)
                .scaled(cpoly(BigRational(1) / pfb)));
      s.check(lhs, cpoly(pfa * pfb) * pfaffian(SkewMatrix<Poly>::from_full(block)));
    }
  }
}

void verify_lgv_msf4(Session& s, const IdentityParams& p, Rand& rng) {
  const Poly z = Poly::variable(vars::z());
  const int rounds = std::max(1, p.trials / 4);
  struct Menu {
    int m, n, big_m, big_n;
  };
  for (const Menu menu : {Menu{0, 0, 2, 2}, Menu{2, 0, 2, 2}, Menu{2, 0, 2, 4}}) {
    const int m = menu.m, n = menu.n, big_m = menu.big_m, big_n = menu.big_n;
    const int width = std::max(m + big_m, n + big_n);
    GridDag g = grid_dag(width, 3);
    std::vector<int> r0pool, rpool;
    for (int c = 1; c <= m; ++c) r0pool.push_back(g.at(c, 1));
    for (int c = m + 1; c <= m + big_m; ++c) rpool.push_back(g.at(c, 1));
    std::vector<int> s0pool, spool;
    for (int c = 1; c <= n; ++c) s0pool.push_back(g.at(c, 3));
    for (int c = n + 1; c <= n + big_n; ++c) spool.push_back(g.at(c, 3));

    for (int trial = 0; trial < rounds; ++trial) {
      const SkewMatrix<BigRational> a = rand_skew_nonsingular(rng, big_m);
      const SkewMatrix<BigRational> b = rand_skew_nonsingular(rng, big_n);
      const BigRational pfa = pfaffian(a);
      const BigRational pfb = pfaffian(b);

      Poly lhs;
      for (int r = std::max(m, n); r <= std::min(m + big_m, n + big_n); ++r) {
        if ((r - m) % 2 != 0) continue;
        Poly inner;
        for (const IndexSet& si : all_subsets(big_m, r - m))
          for (const IndexSet& sj : all_subsets(big_n, r - n))
            inner += cpoly(pf_minor(a, si) * pf_minor(b, sj)) *
                     nonintersecting_gf(g.dag,
                                        concat(r0pool, pick_vertices(si, rpool)),
                                        concat(s0pool, pick_vertices(sj, spool)));
        lhs += z.pow(static_cast<unsigned long>(r)) * inner;
      }

      const Matrix<Poly> jn = Matrix<Poly>::reversal(big_n);
      const Matrix<Poly> jsmall = Matrix<Poly>::reversal(n);
      const SkewMatrix<BigRational> ahat = copfaffian_matrix(a);
      const SkewMatrix<BigRational> bhat = copfaffian_matrix(b);

      const int total = m + big_m + big_n + n;
      Matrix<Poly> block(total, total);
      paste(block, 1, m + big_m + 1, (path_matrix(g.dag, r0pool, spool) * jn).scaled(z));
      paste(block, 1, m + big_m + big_n + 1,
            (path_matrix(g.dag, r0pool, s0pool) * jsmall).scaled(z));
      paste(block, m + 1, m + 1,
            to_poly(ahat.full()).scaled(cpoly(BigRational(1) / pfa)));
      paste(block, m + 1, m + big_m + 1,
            (path_matrix(g.dag, rpool, spool) * jn).scaled(z));
      paste(block, m + 1, m + big_m + big_n + 1,
            (path_matrix(g.dag, rpool, s0pool) * jsmall).scaled(z));
      paste(block, m + big_m + 1, 1,
            (path_matrix(g.dag, r0pool, spool) * jn).transpose().scaled(-z));
      paste(block, m + big_m + 1, m + 1,
            (path_matrix(g.dag, rpool, spool) * jn).transpose().scaled(-z));
      paste(block, m + big_m + 1, m + big_m + 1,
            (jn * to_poly(bhat.full()).transpose() * jn)
                .scaled(cpoly(BigRational(1) / pfb)));
      paste(block, m + big_m + big_n + 1, 1,
            (path_matrix(g.dag, r0pool, s0pool) * jsmall).transpose().scaled(-z));
      paste(block, m + big_m + big_n + 1, m + 1,
            (path_matrix(g.dag, rpool, s0pool) * jsmall).transpose().scaled(-z));
      s.check(lhs, cpoly(pfa * pfb) * pfaffian(SkewMatrix<Poly>::from_full(block)));
    }
  }
}

void verify_lgv_grid_h(Session& s, const IdentityParams&, Rand&) {
  // horizontal steps at row j carry x_j, so a bottom-to-top path collects
  // one monomial of the complete homogeneous sum in x_1..x_height
  const int height = 6;
  GridDag g = grid_dag(8, height);
  const VarBlock xs = x_block(height);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 8; ++j)
      s.check(g.dag.path_gf(g.at(i, 1), g.at(j, height)),
              complete_homogeneous(j - i, xs));
  s.check(g.dag.path_gf(g.at(3, 1), g.at(1, height)), Poly::zero());
  s.check(g.dag.path_gf(g.at(2, 2), g.at(2, 2)), Poly::one());
}

} // namespace pflab::detail
