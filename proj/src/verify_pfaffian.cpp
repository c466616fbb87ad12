// Verifiers for the core Pfaffian algebra: the determinant square, row
// expansion, copfaffian laws, the Jacobi complementary-minor identities, the
// exchange (Pluecker) relations, and the classical closed-form evaluations.

#include <array>
#include <utility>
#include <vector>

#include "pflab/matchings.hpp"
#include "pflab/partitions.hpp"
#include "pflab/symfun.hpp"
#include "pflab/variables.hpp"
#include "verify_impl.hpp"

namespace pflab::detail {

namespace {

std::vector<int> rand_permutation(Rand& rng, int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i + 1;
  for (int i = n - 1; i >= 1; --i) {
    const int j = static_cast<int>(rng.range(0, i));
    std::swap(pi[i], pi[j]);
  }
  return pi;
}

BigRational rat_pow(const BigRational& base, long e) {
  BigRational acc(1);
  for (long k = 0; k < (e < 0 ? -e : e); ++k) acc *= base;
  return e < 0 ? BigRational(1) / acc : acc;
}

// Distinct positive integers, handy as sample points where pair sums and
// products must stay away from the denominator zeros.
std::vector<BigRational> distinct_points(Rand& rng, int n, long lo, long hi) {
  std::vector<long> vals;
  while (static_cast<int>(vals.size()) < n) {
    const long v = rng.range(lo, hi);
    bool fresh = true;
    for (long u : vals) fresh = fresh && u != v;
    if (fresh) vals.push_back(v);
  }
  std::vector<BigRational> out;
  for (long v : vals) out.emplace_back(v);
  return out;
}

} // namespace

void verify_pf_square(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) {
    const int n = static_cast<int>(rng.range(2, 10));
    const auto a = rand_skew(rng, n);
    if (n % 2 != 0) {
      s.check(det(a.full()), BigRational(0));
      continue;
    }
    const BigRational pf = pfaffian(a);
    s.check(pf * pf, det(a.full()));
  }
}

void verify_pf_permutation(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) {
    const int n = 2 * static_cast<int>(rng.range(1, 4));
    const auto a = rand_skew(rng, n);
    const std::vector<int> pi = rand_permutation(rng, n);
    const BigRational lhs = pfaffian(a.reindexed(pi));
    BigRational rhs = pfaffian(a);
    if (permutation_sign(pi) < 0) rhs = -rhs;
    s.check(lhs, rhs);
  }
}

void verify_pf_transform(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) {
    const int n = 2 * static_cast<int>(rng.range(1, 4));
    const auto a = rand_skew(rng, n);
    const auto m = rand_matrix(rng, n, n);
    s.check(block_pfaffian_msf(m, a), det(m) * pfaffian(a));
  }
}

void verify_pf_expansion(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) {
    const int n = 2 * static_cast<int>(rng.range(1, 5));
    const auto a = rand_skew(rng, n);
    PfaffianMemo<BigRational> minors(a);

    // expansion along the first row
    BigRational acc(0);
    const IndexSet everything = IndexSet::full(n);
    for (int j = 2; j <= n; ++j) {
      BigRational term = a.at(1, j) * minors.of(everything.without(1).without(j));
      if (j % 2 != 0) term = -term;
      acc += term;
    }
    s.check(acc, pfaffian(a));

    // tG A = Pf(A) E for the copfaffian G
    if (n >= 2) {
      const auto g = copfaffian_matrix(a);
      const auto prod = g.full().transpose() * a.full();
      const BigRational pf = pfaffian(a);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          s.check(prod.at(i, j), i == j ? pf : BigRational(0));
    }
  }
}

void verify_pf_memo(Session& s, const IdentityParams& p, Rand& rng) {
  for (int t = 0; t < p.trials; ++t) {
    const int n = 2 * static_cast<int>(rng.range(1, 5));
    const auto a = rand_skew(rng, n);
    s.check(pfaffian_combinatorial(a), pfaffian(a));

    PfaffianMemo<BigRational> memo(a);
    const int r = static_cast<int>(rng.range(1, n / 2));
    const std::vector<int> pi = rand_permutation(rng, n);
    std::vector<int> chosen(pi.begin(), pi.begin() + 2 * r);
    const IndexSet keep(std::vector<int>(chosen.begin(), chosen.end()));
    s.check(memo.of(keep), pf_minor(a, keep));
    s.check(memo.of(keep), pfaffian_combinatorial(a.principal(keep)));
  }
}

void verify_pf_matching_sign(Session& s, const IdentityParams&, Rand&) {
  const auto double_factorial = [](int n) {
    long acc = 1;
    for (int k = n - 1; k >= 1; k -= 2) acc *= k;
    return acc;
  };

  for (int n : {2, 4, 6}) {
    const auto all = enumerate_matchings(n);
    s.check_count(static_cast<long>(all.size()), double_factorial(n));

    long sign_sum = 0;
    for (const PerfectMatching& m : all) {
      int crossings = 0;
      for (std::size_t u = 0; u < m.size(); ++u)
        for (std::size_t v = 0; v < m.size(); ++v) {
          if (u == v) continue;
          // pairs (a,b), (c,d) with a < c < b < d cross
          if (m[u].first < m[v].first && m[v].first < m[u].second &&
              m[u].second < m[v].second)
            ++crossings;
        }
      std::vector<int> word;
      for (const auto& [a, b] : m) {
        word.push_back(a);
        word.push_back(b);
      }
      s.check_count(matching_sign(m), crossings % 2 == 0 ? 1 : -1);
      s.check_count(matching_sign(m), permutation_sign(word));
      sign_sum += matching_sign(m);
    }
    // the signed count is Pf of the all-ones skew matrix
    s.check_count(sign_sum, 1);
  }
}

void verify_pf_examples(Session& s, const IdentityParams&, Rand&) {
  // symbolic 4x4
  {
    const auto a = skew_symbol_matrix(4);
    const auto sym = [](const char* name) { return Poly::variable(vars::id(name)); };
    const Poly expected = sym("a12") * sym("a34") - sym("a13") * sym("a24") +
                          sym("a14") * sym("a23");
    s.check(pfaffian(a), expected);
  }

  // small numeric instances
  {
    SkewMatrix<BigRational> b(4);
    long v = 1;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) b.set_upper(i, j, BigRational(v++));
    s.check(pfaffian(b), BigRational(8));

    SkewMatrix<BigRational> c(2);
    c.set_upper(1, 2, BigRational(7));
    s.check(pfaffian(c), BigRational(7));
  }

  // rank-one kernel x_i y_j picks up x at odd and y at even positions
  for (int n : {2, 4, 6}) {
    SkewMatrix<Poly> a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        a.set_upper(i, j, Poly::variable(vars::x(i)) * Poly::variable(vars::y(j)));
    Poly expected = Poly::one();
    for (int i = 1; i <= n; i += 2) expected = expected * Poly::variable(vars::x(i));
    for (int j = 2; j <= n; j += 2) expected = expected * Poly::variable(vars::y(j));
    s.check(pfaffian(a), expected);
  }

  // staircase family
  for (int n : {2, 4, 6, 8}) s.check(pfaffian(p_matrix(n)), Poly::one());

  const Poly sv = Poly::variable(vars::s());
  const Poly tv = Poly::variable(vars::t());
  for (int n : {4, 6}) {
    const auto hat = copfaffian_matrix(p_matrix(n));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Poly expected = sv.pow(static_cast<unsigned long>(j - i - 1)) *
                        tv.pow(static_cast<unsigned long>((i - 1) % 2 + j % 2));
        if ((j - i - 1) % 2 != 0) expected = -expected;
        s.check(hat.at(i, j), expected);
      }
  }

  for (int n : {4, 6}) {
    const auto pm = p_matrix(n);
    PfaffianMemo<Poly> minors(pm);
    for (int r = 1; 2 * r <= n; ++r)
      for (const auto& i : all_subsets(n, 2 * r)) {
        long s_exp = 0, t_exp = -r;
        for (int k = 1; k <= 2 * r; ++k) {
          s_exp += (i.at(k) - k) % 2 != 0 ? 1 : 0;
          t_exp += k % 2 == 0 ? i.at(k) : -i.at(k);
        }
        s.check(minors.of(i), sv.pow(static_cast<unsigned long>(s_exp)) *
                                  tv.pow(static_cast<unsigned long>(t_exp)));
      }
  }

  // all-ones and odd-even staircases as displayed
  {
    const auto s_hat = copfaffian_matrix(s_matrix(4));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        s.check(s_hat.at(i, j), (i + j - 1) % 2 == 0 ? Poly::one() : -Poly::one());

    const auto t_hat = copfaffian_matrix(t_matrix(4));
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        s.check(t_hat.at(i, j), j == i + 1 ? Poly::one() : Poly::zero());
  }

  // the reversal block is its own copfaffian and has unit Pfaffian
  for (int n : {2, 4, 6}) {
    const auto k = k_block_matrix<BigRational>(n);
    s.check(pfaffian(k), BigRational(1));
    const auto khat = copfaffian_matrix(k);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) s.check(khat.at(i, j), k.at(i, j));
  }
}

void verify_jacobi_det(Session& s, const IdentityParams& p, Rand& rng) {
  const int n = 6;
  const int rounds = std::max(1, p.trials / 10);
  for (int t = 0; t < rounds; ++t) {
    Matrix<BigRational> a(n, n);
    BigRational det_a(0);
    do {
      a = rand_matrix(rng, n, n);
      det_a = det(a);
    } while (det_a == 0);

    const IndexSet everything = IndexSet::full(n);
    Matrix<BigRational> tilde(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        BigRational cof =
            det(submatrix(a, everything.without(j), everything.without(i)));
        if ((i + j) % 2 != 0) cof = -cof;
        tilde.set(i, j, cof);
      }

    for (int r = 0; r <= 3; ++r) {
      const BigRational det_pow = rat_pow(det_a, r - 1);
      for (const auto& i : all_subsets(n, r))
        for (const auto& j : all_subsets(n, r)) {
          const BigRational lhs = det(submatrix(tilde, i, j));
          BigRational rhs =
              det_pow * det(submatrix(a, j.complement(n), i.complement(n)));
          if ((i.weight() + j.weight()) % 2 != 0) rhs = -rhs;
          s.check(lhs, rhs);
        }
    }

    // the I = J = {1,n} corner is the Dodgson condensation rule
    std::vector<int> inner_elems, head_elems, tail_elems;
    for (int v = 2; v <= n - 1; ++v) inner_elems.push_back(v);
    for (int v = 1; v <= n - 1; ++v) head_elems.push_back(v);
    for (int v = 2; v <= n; ++v) tail_elems.push_back(v);
    const IndexSet inner(inner_elems), head(head_elems), tail(tail_elems);
    s.check(det_a * det(submatrix(a, inner, inner)),
            det(submatrix(a, head, head)) * det(submatrix(a, tail, tail)) -
                det(submatrix(a, head, tail)) * det(submatrix(a, tail, head)));
  }
}

void verify_jacobi_pf(Session& s, const IdentityParams& p, Rand& rng) {
  const int n = 6;
  const int rounds = std::max(1, p.trials / 10);
  for (int t = 0; t < rounds; ++t) {
    const auto a = rand_skew_nonsingular(rng, n);
    const auto hat = copfaffian_matrix(a);
    const BigRational pf = pfaffian(a);
    PfaffianMemo<BigRational> minors(a);
    PfaffianMemo<BigRational> hat_minors(hat);

    for (int r = 0; 2 * r <= n; ++r) {
      const BigRational pf_pow = rat_pow(pf, r - 1);
      for (const auto& i : all_subsets(n, 2 * r)) {
        BigRational rhs = pf_pow * minors.of(i.complement(n));
        if ((i.weight() - r) % 2 != 0) rhs = -rhs;
        s.check(hat_minors.of(i), rhs);
      }
    }

    // hat of hat collapses back onto A, scaled by Pf(A)^{n/2 - 2}
    const auto hathat = copfaffian_matrix(hat);
    const BigRational scale = rat_pow(pf, n / 2 - 2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) s.check(hathat.at(i, j), a.at(i, j) * scale);
  }
}

void verify_plucker(Session& s, const IdentityParams& p, Rand& rng) {
  // Union factors are sequences: i_j prepended to the complement on the left,
  // k_j appended to I on the right; set order would cost a shuffle sign.
  const std::array<std::pair<int, int>, 3> menus = {{{1, 3}, {3, 3}, {3, 5}}};
  for (int t = 0; t < p.trials; ++t) {
    const auto [m, n] = menus[static_cast<std::size_t>(t) % menus.size()];
    const int big = m + n;
    const auto a = rand_skew(rng, big);
    PfaffianMemo<BigRational> minors(a);
    for (const auto& i : all_subsets(big, m)) {
      const IndexSet ibar = i.complement(big);
      BigRational lhs(0);
      for (int j = 1; j <= m; ++j) {
        std::vector<int> joined = {i.at(j)};
        for (int v : ibar.elems()) joined.push_back(v);
        BigRational term = minors.of(i.without(i.at(j))) * pf_seq(a, joined);
        if (j % 2 == 0) term = -term;
        lhs += term;
      }
      BigRational rhs(0);
      for (int j = 1; j <= n; ++j) {
        std::vector<int> joined = i.elems();
        joined.push_back(ibar.at(j));
        BigRational term = pf_seq(a, joined) * minors.of(ibar.without(ibar.at(j)));
        if (j % 2 == 0) term = -term;
        rhs += term;
      }
      s.check(lhs, rhs);
    }
  }
}

void verify_basic_identity(Session& s, const IdentityParams& p, Rand& rng) {
  const int big = 8;
  const int l = 1;
  for (int t = 0; t < p.trials; ++t) {
    const auto a = rand_skew(rng, big);
    std::vector<int> lead;
    for (int v = 1; v <= 2 * l; ++v) lead.push_back(v);

    const auto check_sequence = [&](const std::vector<int>& picks) {
      std::vector<int> full = picks;
      full.insert(full.end(), lead.begin(), lead.end());
      const BigRational lhs = pf_seq(a, lead) * pf_seq(a, full);

      BigRational rhs(0);
      for (std::size_t j = 1; j < picks.size(); ++j) {
        std::vector<int> head = lead;
        head.push_back(picks[0]);
        head.push_back(picks[j]);
        std::vector<int> rest;
        for (std::size_t u = 1; u < picks.size(); ++u)
          if (u != j) rest.push_back(picks[u]);
        rest.insert(rest.end(), lead.begin(), lead.end());
        BigRational term = pf_seq(a, head) * pf_seq(a, rest);
        if (j % 2 == 0) term = -term;
        rhs += term;
      }
      s.check(lhs, rhs);
    };

    for (const auto& i : all_subsets(big - 2 * l, 4)) {
      std::vector<int> picks;
      for (int v : i.elems()) picks.push_back(v + 2 * l);
      check_sequence(picks);
    }
    // the picked sequence need not be sorted
    check_sequence({7, 3, 8, 5});
    check_sequence({4, 8, 3, 6});
  }
}

void verify_pf_lem3(Session& s, const IdentityParams& p, Rand& rng) {
  const std::array<std::array<int, 4>, 2> menus = {{{2, 2, 2, 4}, {1, 1, 2, 2}}};
  const int rounds = std::max(1, p.trials / 4);
  for (int t = 0; t < rounds; ++t) {
    const auto [m, n, bigm, bign] = menus[static_cast<std::size_t>(t) % menus.size()];
    const auto a = rand_skew(rng, bigm);
    const auto b = rand_skew_nonsingular(rng, bign);
    const BigRational pf_b = pfaffian(b);

    const auto t11 = rand_matrix(rng, m, n);
    const auto t12 = rand_matrix(rng, m, bign);
    const auto t21 = rand_matrix(rng, bigm, n);
    const auto t22 = rand_matrix(rng, bigm, bign);

    const auto jn = Matrix<BigRational>::reversal(n);
    const auto jm = Matrix<BigRational>::reversal(m);
    const auto jbign = Matrix<BigRational>::reversal(bign);
    const auto jbigm = Matrix<BigRational>::reversal(bigm);
    const auto bf = b.full();
    const auto af = a.full();
    const auto bhat = copfaffian_matrix(b).full();
    const BigRational inv_pf_b = BigRational(1) / pf_b;

    // compressed (m+M+n) layout, scaled by Pf(B)^{-1}
    Matrix<BigRational> one(m + bigm + n, m + bigm + n);
    paste(one, 1, 1, t12 * bf * t12.transpose());
    paste(one, 1, m + 1, t12 * bf * t22.transpose());
    paste(one, 1, m + bigm + 1, t11 * jn);
    paste(one, m + 1, 1, t22 * bf * t12.transpose());
    paste(one, m + 1, m + 1, af + t22 * bf * t22.transpose());
    paste(one, m + 1, m + bigm + 1, t21 * jn);
    paste(one, m + bigm + 1, 1, -(jn * t11.transpose()));
    paste(one, m + bigm + 1, m + 1, -(jn * t21.transpose()));
    const BigRational first =
        inv_pf_b * pfaffian(SkewMatrix<BigRational>::from_full(one));

    // expanded (m+M+N+n) layout carrying Pf(B)^{-1} JN tBhat JN
    const int d2 = m + bigm + bign + n;
    Matrix<BigRational> two(d2, d2);
    paste(two, 1, m + bigm + 1, t12 * jbign);
    paste(two, 1, m + bigm + bign + 1, t11 * jn);
    paste(two, m + 1, m + 1, af);
    paste(two, m + 1, m + bigm + 1, t22 * jbign);
    paste(two, m + 1, m + bigm + bign + 1, t21 * jn);
    paste(two, m + bigm + 1, 1, -(jbign * t12.transpose()));
    paste(two, m + bigm + 1, m + 1, -(jbign * t22.transpose()));
    paste(two, m + bigm + 1, m + bigm + 1,
          (jbign * bhat.transpose() * jbign).scaled(inv_pf_b));
    paste(two, m + bigm + bign + 1, 1, -(jn * t11.transpose()));
    paste(two, m + bigm + bign + 1, m + 1, -(jn * t21.transpose()));
    const BigRational second = pfaffian(SkewMatrix<BigRational>::from_full(two));

    // reflected (M+m+n+N) layout carrying Pf(B)^{-1} Bhat
    const int d3 = bigm + m + n + bign;
    Matrix<BigRational> three(d3, d3);
    paste(three, 1, 1, jbigm * af.transpose() * jbigm);
    paste(three, 1, bigm + m + 1, jbigm * t21);
    paste(three, 1, bigm + m + n + 1, jbigm * t22);
    paste(three, bigm + 1, bigm + m + 1, jm * t11);
    paste(three, bigm + 1, bigm + m + n + 1, jm * t12);
    paste(three, bigm + m + 1, 1, -(t21.transpose() * jbigm));
    paste(three, bigm + m + 1, bigm + 1, -(t11.transpose() * jm));
    paste(three, bigm + m + n + 1, 1, -(t22.transpose() * jbigm));
    paste(three, bigm + m + n + 1, bigm + 1, -(t12.transpose() * jm));
    paste(three, bigm + m + n + 1, bigm + m + n + 1, bhat.scaled(inv_pf_b));
    const BigRational third = pfaffian(SkewMatrix<BigRational>::from_full(three));

    s.check(first, second);
    s.check(second, third);
  }
}

void verify_pfeval(Session& s, const IdentityParams& p, Rand& rng) {
  const Poly one = Poly::one();
  const Poly tv = Poly::variable(vars::t());

  // Pf[(x_i-x_j)/(x_i+x_j)], denominators cleared: each entry carries the
  // product of the pair factors it does not own.
  for (int n : {2, 4}) {
    const VarBlock x = x_block(n);
    SkewMatrix<Poly> b(n);
    Poly d = one;
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        d = d * (Poly::variable(x[k - 1]) + Poly::variable(x[l - 1]));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Poly entry = Poly::variable(x[i - 1]) - Poly::variable(x[j - 1]);
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i && l == j) continue;
            entry = entry * (Poly::variable(x[k - 1]) + Poly::variable(x[l - 1]));
          }
        b.set_upper(i, j, entry);
      }
    Poly expected = vandermonde(x);
    for (int e = 0; e < n / 2 - 1; ++e) expected = expected * d;
    s.check(pfaffian(b), expected);
  }

  // the same two kernels at size 6, on exact rational sample points
  for (int round = 0; round < 3; ++round) {
    const int n = 6;
    const auto pts = distinct_points(rng, n, 1, 40);

    SkewMatrix<BigRational> c1(n), c2(n);
    BigRational prod1(1), prod2(1), delta(1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const BigRational diff = pts[i - 1] - pts[j - 1];
        const BigRational sum = pts[i - 1] + pts[j - 1];
        const BigRational mix = BigRational(1) - pts[i - 1] * pts[j - 1];
        c1.set_upper(i, j, diff / sum);
        c2.set_upper(i, j, diff / mix);
        prod1 *= sum;
        prod2 *= mix;
        delta *= diff;
      }
    s.check(pfaffian(c1), delta / prod1);
    s.check(pfaffian(c2), delta / prod2);
  }

  // t-deformed kernel Pf[(x_j-x_i)/(1-t x_i x_j)] with prefactor t^{r(r-1)}
  for (int m : {2, 4}) {
    const VarBlock x = x_block(m);
    SkewMatrix<Poly> b(m);
    Poly d = one;
    for (int k = 1; k <= m; ++k)
      for (int l = k + 1; l <= m; ++l)
        d = d * (one - tv * Poly::variable(x[k - 1]) * Poly::variable(x[l - 1]));
    Poly rev = one;
    for (int k = 1; k <= m; ++k)
      for (int l = k + 1; l <= m; ++l)
        rev = rev * (Poly::variable(x[l - 1]) - Poly::variable(x[k - 1]));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        Poly entry = Poly::variable(x[j - 1]) - Poly::variable(x[i - 1]);
        for (int k = 1; k <= m; ++k)
          for (int l = k + 1; l <= m; ++l) {
            if (k == i && l == j) continue;
            entry = entry * (one - tv * Poly::variable(x[k - 1]) * Poly::variable(x[l - 1]));
          }
        b.set_upper(i, j, entry);
      }
    const int r = m / 2;
    Poly expected = tv.pow(static_cast<unsigned long>(r * (r - 1))) * rev;
    for (int e = 0; e < r - 1; ++e) expected = expected * d;
    s.check(pfaffian(b), expected);
  }

  // size 6 on sample points with t rational as well
  for (int round = 0; round < 3; ++round) {
    const int m = 6;
    const auto pts = distinct_points(rng, m, 1, 40);
    const BigRational tval = BigRational(rng.range(2, 9)) / BigRational(97);

    SkewMatrix<BigRational> c(m);
    BigRational dprod(1), rev(1);
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        const BigRational den = BigRational(1) - tval * pts[i - 1] * pts[j - 1];
        c.set_upper(i, j, (pts[j - 1] - pts[i - 1]) / den);
        dprod *= den;
        rev *= pts[j - 1] - pts[i - 1];
      }
    const int r = m / 2;
    s.check(pfaffian(c), rat_pow(tval, r * (r - 1)) * rev / dprod);
  }

  // split-power Vandermonde Pfaffian: entries (x_i^r - x_j^r)^2/(x_i - x_j)
  for (int n : {2, 4, 6}) {
    const int r = n / 2;
    const VarBlock x = x_block(n);
    SkewMatrix<Poly> b(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Poly xi = Poly::variable(x[i - 1]);
        const Poly xj = Poly::variable(x[j - 1]);
        Poly geom = Poly::zero();
        for (int e = 0; e <= r - 1; ++e)
          geom = geom + xi.pow(static_cast<unsigned long>(e)) *
                            xj.pow(static_cast<unsigned long>(r - 1 - e));
        b.set_upper(i, j, (xi.pow(static_cast<unsigned long>(r)) -
                           xj.pow(static_cast<unsigned long>(r))) *
                              geom);
      }
    s.check(pfaffian(b), vandermonde(x));
  }

  // Cauchy determinants, rows cleared of their denominators
  for (int n : {2, 4}) {
    const VarBlock x = x_block(n);
    const VarBlock y = y_block(n);
    Matrix<Poly> b1(n, n), b2(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Poly e1 = one, e2 = one;
        for (int k = 1; k <= n; ++k) {
          if (k == j) continue;
          e1 = e1 * (Poly::variable(x[i - 1]) + Poly::variable(y[k - 1]));
          e2 = e2 * (one - Poly::variable(x[i - 1]) * Poly::variable(y[k - 1]));
        }
        b1.set(i, j, e1);
        b2.set(i, j, e2);
      }
    const Poly expected = vandermonde(x) * vandermonde(y);
    s.check(det(b1), expected);
    s.check(det(b2), expected);
  }

  for (int round = 0; round < 3; ++round) {
    const int n = 6;
    const auto xs = distinct_points(rng, n, 1, 40);
    const auto ys = distinct_points(rng, n, 41, 80);
    Matrix<BigRational> c1(n, n), c2(n, n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        c1.set(i, j, BigRational(1) / (xs[i - 1] + ys[j - 1]));
        c2.set(i, j, BigRational(1) / (BigRational(1) - xs[i - 1] * ys[j - 1]));
      }
    BigRational deltas(1), p1(1), p2(1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        deltas *= (xs[i - 1] - xs[j - 1]) * (ys[i - 1] - ys[j - 1]);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        p1 *= xs[i - 1] + ys[j - 1];
        p2 *= BigRational(1) - xs[i - 1] * ys[j - 1];
      }
    s.check(det(c1), deltas / p1);
    s.check(det(c2), deltas / p2);
  }

  (void)p;
}

void verify_schur_sum(Session& s, const IdentityParams& p, Rand&) {
  std::vector<std::pair<int, int>> runs; // (n, index cap L)
  if (p.n == 2)
    runs = {{2, 2}, {2, 3}};
  else if (p.n == 4)
    runs = {{4, 5}};
  else
    throw SkipRun{"needs n = 2 or n = 4"};

  const auto sym = [](int k, int l) {
    const std::string name = "al" + std::to_string(k) + std::to_string(l);
    return Poly::variable(vars::id(name));
  };
  const auto entry = [&](long a, long b) {
    if (a < b) return sym(static_cast<int>(a), static_cast<int>(b));
    if (a > b) return -sym(static_cast<int>(b), static_cast<int>(a));
    return Poly::zero();
  };

  for (const auto& [n, cap] : runs) {
    const VarBlock x = x_block(n);

    Poly lhs = Poly::zero();
    for (const Partition& lam :
         enumerate_partitions(static_cast<long>(n) * (cap - n + 1), cap - n + 1, n)) {
      SkewMatrix<Poly> mat(n);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          mat.set_upper(a, b, entry(lam.part(a) + n - a, lam.part(b) + n - b));
      lhs = lhs + pfaffian(mat) * schur(lam, x);
    }
    lhs = vandermonde(x) * lhs;

    SkewMatrix<Poly> beta(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Poly xi = Poly::variable(x[i - 1]);
        const Poly xj = Poly::variable(x[j - 1]);
        Poly acc = Poly::zero();
        for (int k = 0; k < cap; ++k)
          for (int l = k + 1; l <= cap; ++l)
            acc = acc + sym(k, l) * (xi.pow(static_cast<unsigned long>(k)) *
                                         xj.pow(static_cast<unsigned long>(l)) -
                                     xi.pow(static_cast<unsigned long>(l)) *
                                         xj.pow(static_cast<unsigned long>(k)));
        beta.set_upper(i, j, acc);
      }
    s.check(lhs, pfaffian(beta));
  }
}

} // namespace pflab::detail
