#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pflab/errors.hpp"
#include "pflab/linalg.hpp"
#include "pflab/matchings.hpp"
#include "pflab/matrix.hpp"
#include "pflab/variables.hpp"
#include "test_util.hpp"

using pflab::BigRational;
using pflab::IndexSet;
using pflab::Matrix;
using pflab::Poly;
using pflab::SkewMatrix;
using pflab::testutil::Rng;

namespace {

// (i,j)-cofactor matrix: entry (i,j) is (-1)^{i+j} det(A with row j, col i removed).
Matrix<BigRational> cofactor_matrix(const Matrix<BigRational>& a) {
  const int n = a.rows();
  const IndexSet everything = IndexSet::full(n);
  Matrix<BigRational> out(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      BigRational minor = pflab::det(
          submatrix(a, everything.without(j), everything.without(i)));
      if ((i + j) % 2 != 0) minor = -minor;
      out.set(i, j, minor);
    }
  }
  return out;
}

} // namespace

TEST_CASE("index sets") {
  const IndexSet i({4, 1, 3});
  CHECK(i.count() == 3);
  CHECK(i.weight() == 8);
  CHECK(i.at(1) == 1);
  CHECK(i.at(3) == 4);
  CHECK(i.contains(3));
  CHECK(!i.contains(2));
  CHECK(i.to_string() == "{1,3,4}");
  CHECK(i.complement(5) == IndexSet({2, 5}));
  CHECK(i.without(3) == IndexSet({1, 4}));
  CHECK(i.without(3).unite(IndexSet({3})) == i);
  CHECK(IndexSet::full(3) == IndexSet({1, 2, 3}));
  CHECK(IndexSet().complement(3) == IndexSet::full(3));
  CHECK_THROWS_AS(IndexSet({0, 1}), pflab::IndexOutOfRange);
  CHECK_THROWS_AS(IndexSet({2, 2}), pflab::Error);
  CHECK_THROWS_AS(i.complement(3), pflab::IndexOutOfRange);
  CHECK_THROWS_AS(i.unite(IndexSet({4})), pflab::Error);
  CHECK_THROWS_AS(i.at(4), pflab::IndexOutOfRange);

  const auto threes = pflab::all_subsets(6, 3);
  CHECK(threes.size() == 20);
  CHECK(threes.front() == IndexSet({1, 2, 3}));
  CHECK(threes.back() == IndexSet({4, 5, 6}));
  CHECK(pflab::all_subsets(4, 0).size() == 1);
  CHECK(pflab::all_subsets(3, 5).empty());
}

TEST_CASE("submatrix extraction") {
  const auto e2 = Matrix<BigRational>::identity(2);
  const auto one_by_one = submatrix(e2, IndexSet({1}), IndexSet({2}));
  CHECK(one_by_one.rows() == 1);
  CHECK(one_by_one.at(1, 1) == BigRational(0));

  Matrix<BigRational> t(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) t.set(i, j, BigRational(10 * i + j));
  const auto col = submatrix(t, IndexSet({1, 3}), IndexSet({2}));
  CHECK(col.rows() == 2);
  CHECK(col.cols() == 1);
  CHECK(col.at(1, 1) == BigRational(12));
  CHECK(col.at(2, 1) == BigRational(32));
  CHECK(submatrix(t, IndexSet::full(3), IndexSet::full(3)) == t);
  CHECK_THROWS_AS(submatrix(t, IndexSet({4}), IndexSet({1})), pflab::IndexOutOfRange);
}

TEST_CASE("determinants") {
  Matrix<BigRational> c(1, 1);
  c.set(1, 1, BigRational(7));
  CHECK(pflab::det(c) == BigRational(7));
  CHECK(pflab::det(Matrix<BigRational>(0, 0)) == BigRational(1));

  Matrix<BigRational> rot(2, 2);
  rot.set(1, 2, BigRational(1));
  rot.set(2, 1, BigRational(-1));
  CHECK(pflab::det(rot) == BigRational(1));

  CHECK_THROWS_AS(pflab::det(Matrix<BigRational>(2, 3)), pflab::NotSquare);

  Rng rng(411);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = pflab::testutil::random_matrix(rng, 5, 5, 9);
    CHECK(pflab::det_bareiss(m) == pflab::det_cofactor(m));
    CHECK(pflab::det(m.transpose()) == pflab::det(m));
  }
  for (int trial = 0; trial < 6; ++trial) {
    const auto a = pflab::testutil::random_matrix(rng, 4, 4, 6);
    const auto b = pflab::testutil::random_matrix(rng, 4, 4, 6);
    CHECK(pflab::det(a * b) == pflab::det(a) * pflab::det(b));
  }

  // repeated row kills the determinant through the pivot search path
  auto sing = pflab::testutil::random_matrix(rng, 5, 5, 9);
  for (int j = 1; j <= 5; ++j) sing.set(3, j, sing.at(1, j));
  CHECK(pflab::det(sing) == BigRational(0));

  // Vandermonde in polynomial entries: det(x_i^{j-1}) = prod_{i<j} (x_j - x_i)
  Matrix<Poly> v(3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      v.set(i, j, Poly::variable(pflab::vars::x(i)).pow(static_cast<unsigned long>(j - 1)));
  Poly expected = Poly::one();
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      expected *= Poly::variable(pflab::vars::x(j)) - Poly::variable(pflab::vars::x(i));
  CHECK(pflab::det(v) == expected);
}

TEST_CASE("pfaffian by matchings") {
  const auto symbolic = pflab::skew_symbol_matrix(4);
  CHECK(pflab::pfaffian_combinatorial(symbolic).to_string() ==
        "a12*a34 - a13*a24 + a14*a23");

  SkewMatrix<BigRational> two(2);
  two.set_upper(1, 2, BigRational(7));
  CHECK(pflab::pfaffian_combinatorial(two) == BigRational(7));

  SkewMatrix<BigRational> four(4);
  long next = 1;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) four.set_upper(i, j, BigRational(next++));
  CHECK(pflab::pfaffian_combinatorial(four) == BigRational(8)); // 1*6 - 2*5 + 3*4

  CHECK(pflab::pfaffian_combinatorial(SkewMatrix<BigRational>(0)) == BigRational(1));
  CHECK_THROWS_AS(pflab::pfaffian_combinatorial(SkewMatrix<BigRational>(3)), pflab::OddSize);
  CHECK_THROWS_AS(pflab::pfaffian(SkewMatrix<BigRational>(5)), pflab::OddSize);
}

TEST_CASE("memoized pfaffian matches the defining sum") {
  Rng rng(4242);
  for (int n = 2; n <= 10; n += 2) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = pflab::testutil::random_skew(rng, n, 9);
      CHECK(pflab::pfaffian(a) == pflab::pfaffian_combinatorial(a));
    }
  }
  for (int n = 2; n <= 6; n += 2) {
    CHECK(pflab::pfaffian(pflab::k_block_matrix<BigRational>(n)) == BigRational(1));
    const int m = n / 2;
    const int sign = (m * (m - 1) / 2) % 2 == 0 ? 1 : -1;
    CHECK(pflab::pfaffian(pflab::l_block_matrix<BigRational>(n)) == BigRational(sign));
  }
}

TEST_CASE("pfaffian covariance laws") {
  Rng rng(77);

  // Pf(A)^2 = det(A)
  for (int n = 2; n <= 10; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 9);
    const auto pf = pflab::pfaffian(a);
    CHECK(pf * pf == pflab::det(a.full()));
  }

  // Pf(a_{pi(i) pi(j)}) = sgn(pi) Pf(A)
  for (int n = 2; n <= 8; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 9);
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(pi[i], pi[rng.range(0, i)]);
    const BigRational sign(pflab::permutation_sign(pi));
    CHECK(pflab::pfaffian(a.reindexed(pi)) == sign * pflab::pfaffian(a));
  }

  // Pf(B A tB) = det(B) Pf(A)
  for (int n = 2; n <= 6; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 6);
    const auto b = pflab::testutil::random_matrix(rng, n, n, 6);
    const auto conj = SkewMatrix<BigRational>::from_full(b * a.full() * b.transpose());
    CHECK(pflab::pfaffian(conj) == pflab::det(b) * pflab::pfaffian(a));
  }

  // scaling rows and columns together: Pf(cA) = c^{n/2} Pf(A), c = -1 included
  for (int n = 2; n <= 8; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 9);
    const BigRational c(rng.range(2, 5));
    BigRational cpow(1);
    for (int k = 0; k < n / 2; ++k) cpow *= c;
    CHECK(pflab::pfaffian(a.scaled(c)) == cpow * pflab::pfaffian(a));
    const BigRational flip(n / 2 % 2 == 0 ? 1 : -1);
    CHECK(pflab::pfaffian(a.negated()) == flip * pflab::pfaffian(a));
  }
}

TEST_CASE("copfaffian matrix and row expansion") {
  Rng rng(909);
  for (int n = 2; n <= 8; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 9);
    const auto hat = pflab::copfaffian_matrix(a);
    const auto pf = pflab::pfaffian(a);

    // tAhat * A = Pf(A) * E
    CHECK(hat.full().transpose() * a.full() ==
          Matrix<BigRational>::identity(n).scaled(pf));

    // delta_ij Pf(A) = sum_k a_kj gamma(k,i)
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        BigRational sum(0);
        for (int k = 1; k <= n; ++k) sum += a.at(k, j) * hat.at(k, i);
        CHECK(sum == (i == j ? pf : BigRational(0)));
      }
    }
  }

  // cofactors of the full matrix vs copfaffians: Delta(i,j) = gamma(j,i) Pf(A)
  for (int n = 2; n <= 6; n += 2) {
    const auto a = pflab::testutil::random_skew(rng, n, 9);
    const auto hat = pflab::copfaffian_matrix(a);
    const auto pf = pflab::pfaffian(a);
    const auto delta = cofactor_matrix(a.full());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) CHECK(delta.at(i, j) == hat.at(j, i) * pf);
  }

  CHECK_THROWS_AS(pflab::copfaffian_matrix(SkewMatrix<BigRational>(3)), pflab::OddSize);
}

TEST_CASE("jacobi minor identity for cofactor matrices") {
  Rng rng(31337);
  for (int n : {5, 6}) {
    const auto a = pflab::testutil::random_matrix(rng, n, n, 7);
    const auto tilde = cofactor_matrix(a);
    const auto det_a = pflab::det(a);
    const IndexSet everything = IndexSet::full(n);

    for (int r = 1; r <= 3; ++r) {
      BigRational det_pow(1);
      for (int k = 0; k < r - 1; ++k) det_pow *= det_a;
      for (const auto& i : pflab::all_subsets(n, r)) {
        for (const auto& j : pflab::all_subsets(n, r)) {
          const BigRational lhs = pflab::det(submatrix(tilde, i, j));
          BigRational rhs =
              det_pow * pflab::det(submatrix(a, j.complement(n), i.complement(n)));
          if ((i.weight() + j.weight()) % 2 != 0) rhs = -rhs;
          CHECK(lhs == rhs);
        }
      }
    }
  }

  // the I = J = {1,n} corner is the Dodgson condensation rule
  const auto m = pflab::testutil::random_matrix(rng, 5, 5, 7);
  const IndexSet inner({2, 3, 4});
  const IndexSet head({1, 2, 3, 4});
  const IndexSet tail({2, 3, 4, 5});
  CHECK(pflab::det(m) * pflab::det(submatrix(m, inner, inner)) ==
        pflab::det(submatrix(m, head, head)) * pflab::det(submatrix(m, tail, tail)) -
            pflab::det(submatrix(m, head, tail)) * pflab::det(submatrix(m, tail, head)));
}

TEST_CASE("jacobi identity for copfaffian matrices") {
  Rng rng(5150);
  for (int n : {4, 6}) {
    const auto a = pflab::testutil::random_skew(rng, n, 7);
    const auto hat = pflab::copfaffian_matrix(a);
    const auto pf = pflab::pfaffian(a);
    pflab::PfaffianMemo<BigRational> minors(a);
    pflab::PfaffianMemo<BigRational> hat_minors(hat);

    for (int r = 1; 2 * r <= n; ++r) {
      BigRational pf_pow(1);
      for (int k = 0; k < r - 1; ++k) pf_pow *= pf;
      for (const auto& i : pflab::all_subsets(n, 2 * r)) {
        BigRational rhs = pf_pow * minors.of(i.complement(n));
        if ((i.weight() - r) % 2 != 0) rhs = -rhs;
        CHECK(hat_minors.of(i) == rhs);
      }
    }

    // hat of hat collapses back onto A
    const int m = n / 2;
    BigRational scale(1);
    for (int k = 0; k < m - 2; ++k) scale *= pf;
    CHECK(pflab::copfaffian_matrix(hat) == a.scaled(scale));
  }
}

TEST_CASE("pluecker relation for subpfaffians") {
  // The union factors are read as sequences: i_j is prepended to the
  // complement on the left, k_j appended to I on the right. Sorting them
  // into set order would cost a shuffle sign and break the raw statement.
  Rng rng(640);
  for (const auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {3, 3}, {3, 5}}) {
    const int big = m + n;
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = pflab::testutil::random_skew(rng, big, 9);
      pflab::PfaffianMemo<BigRational> minors(a);
      for (const auto& i : pflab::all_subsets(big, m)) {
        const IndexSet ibar = i.complement(big);
        BigRational lhs(0);
        for (int j = 1; j <= m; ++j) {
          std::vector<int> joined = {i.at(j)};
          for (int v : ibar.elems()) joined.push_back(v);
          BigRational term =
              minors.of(i.without(i.at(j))) * pflab::pf_seq(a, joined);
          if (j % 2 == 0) term = -term;
          lhs += term;
        }
        BigRational rhs(0);
        for (int j = 1; j <= n; ++j) {
          std::vector<int> joined = i.elems();
          joined.push_back(ibar.at(j));
          BigRational term =
              pflab::pf_seq(a, joined) * minors.of(ibar.without(ibar.at(j)));
          if (j % 2 == 0) term = -term;
          rhs += term;
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("overlapping subpfaffian identity") {
  // size N=8, #I = 2k = 4 drawn beyond the first 2l = 2 indices
  Rng rng(888);
  const int big = 8;
  const int l = 1;
  for (int trial = 0; trial < 2; ++trial) {
    const auto a = pflab::testutil::random_skew(rng, big, 9);
    std::vector<int> lead;
    for (int v = 1; v <= 2 * l; ++v) lead.push_back(v);

    const auto check_sequence = [&](const std::vector<int>& picks) {
      std::vector<int> full = picks;
      full.insert(full.end(), lead.begin(), lead.end());
      const BigRational lhs = pflab::pf_seq(a, lead) * pflab::pf_seq(a, full);

      BigRational rhs(0);
      for (std::size_t j = 1; j < picks.size(); ++j) {
        std::vector<int> head = lead;
        head.push_back(picks[0]);
        head.push_back(picks[j]);
        std::vector<int> rest;
        for (std::size_t u = 1; u < picks.size(); ++u)
          if (u != j) rest.push_back(picks[u]);
        rest.insert(rest.end(), lead.begin(), lead.end());
        BigRational term = pflab::pf_seq(a, head) * pflab::pf_seq(a, rest);
        if (j % 2 == 0) term = -term; // paper index j+1: sign (-1)^{j+1}
        rhs += term;
      }
      CHECK(lhs == rhs);
    };

    for (const auto& i : pflab::all_subsets(big - 2 * l, 4)) {
      std::vector<int> picks;
      for (int v : i.elems()) picks.push_back(v + 2 * l);
      check_sequence(picks);
    }
    // order of the picked sequence is free
    check_sequence({7, 3, 8, 5});
    check_sequence({4, 8, 3, 6});
  }
}

TEST_CASE("three-fold block pfaffian identity") {
  Rng rng(112233);
  for (const auto [m, n, bigm, bign] :
       std::vector<std::array<int, 4>>{{2, 2, 2, 4}, {1, 1, 2, 2}}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = pflab::testutil::random_skew(rng, bigm, 5);
      SkewMatrix<BigRational> b(bign);
      BigRational pf_b(0);
      do {
        b = pflab::testutil::random_skew(rng, bign, 5);
        pf_b = pflab::pfaffian(b);
      } while (pf_b == 0);

      const auto t11 = pflab::testutil::random_matrix(rng, m, n, 5);
      const auto t12 = pflab::testutil::random_matrix(rng, m, bign, 5);
      const auto t21 = pflab::testutil::random_matrix(rng, bigm, n, 5);
      const auto t22 = pflab::testutil::random_matrix(rng, bigm, bign, 5);

      const auto jn = Matrix<BigRational>::reversal(n);
      const auto jm = Matrix<BigRational>::reversal(m);
      const auto jbign = Matrix<BigRational>::reversal(bign);
      const auto jbigm = Matrix<BigRational>::reversal(bigm);
      const auto bf = b.full();
      const auto af = a.full();
      const auto bhat = pflab::copfaffian_matrix(b).full();
      const BigRational inv_pf_b = BigRational(1) / pf_b;

      // Pf(B)^{-1} Pf of the compressed (m+M+n) layout
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
          inv_pf_b * pflab::pfaffian(SkewMatrix<BigRational>::from_full(one));

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
      const BigRational second = pflab::pfaffian(SkewMatrix<BigRational>::from_full(two));

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
      const BigRational third = pflab::pfaffian(SkewMatrix<BigRational>::from_full(three));

      CHECK(first == second);
      CHECK(second == third);
    }
  }
}

TEST_CASE("staircase matrix closed forms") {
  for (int n : {2, 4, 6, 8}) CHECK(pflab::pfaffian(pflab::p_matrix(n)) == Poly::one());

  // copfaffian entries of P_n(s,t) swap the roles of s and t
  const Poly s = Poly::variable(pflab::vars::s());
  const Poly t = Poly::variable(pflab::vars::t());
  for (int n : {4, 6}) {
    const auto hat = pflab::copfaffian_matrix(pflab::p_matrix(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Poly expected = s.pow(static_cast<unsigned long>(j - i - 1)) *
                        t.pow(static_cast<unsigned long>((i - 1) % 2 + j % 2));
        if ((j - i - 1) % 2 != 0) expected = -expected;
        CHECK(hat.at(i, j) == expected);
      }
    }
  }

  // Pf(P_n^I_I) = s^{sum (i_k - k) mod 2} t^{sum (-1)^k i_k - r}
  for (int n : {4, 6}) {
    const auto p = pflab::p_matrix(n);
    pflab::PfaffianMemo<Poly> minors(p);
    for (int r = 1; 2 * r <= n; ++r) {
      for (const auto& i : pflab::all_subsets(n, 2 * r)) {
        long s_exp = 0, t_exp = -r;
        for (int k = 1; k <= 2 * r; ++k) {
          s_exp += (i.at(k) - k) % 2 != 0 ? 1 : 0;
          t_exp += k % 2 == 0 ? i.at(k) : -i.at(k);
        }
        CHECK(minors.of(i) == s.pow(static_cast<unsigned long>(s_exp)) *
                                  t.pow(static_cast<unsigned long>(t_exp)));
      }
    }
  }

  // S_4 and T_4 copfaffians as displayed
  const auto s_hat = pflab::copfaffian_matrix(pflab::s_matrix(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(s_hat.at(i, j) == ((i + j - 1) % 2 == 0 ? Poly::one() : -Poly::one()));

  const auto t_hat = pflab::copfaffian_matrix(pflab::t_matrix(4));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(t_hat.at(i, j) == (j == i + 1 ? Poly::one() : Poly::zero()));

  // K and L are each other's fixed points under the hat
  for (int n : {2, 4, 6}) {
    const auto k = pflab::k_block_matrix<BigRational>(n);
    CHECK(pflab::copfaffian_matrix(k) == k);
  }
}

TEST_CASE("block pfaffian of T A tT") {
  Rng rng(2468);
  SkewMatrix<BigRational> rot(2);
  rot.set_upper(1, 2, BigRational(1));
  CHECK(pflab::block_pfaffian_msf(Matrix<BigRational>::identity(2), rot) == BigRational(1));

  // equals the subset sum over column picks of T
  for (const auto [m, big] : std::vector<std::pair<int, int>>{{2, 4}, {4, 6}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto t = pflab::testutil::random_matrix(rng, m, big, 7);
      const auto a = pflab::testutil::random_skew(rng, big, 7);
      pflab::PfaffianMemo<BigRational> minors(a);
      BigRational sum(0);
      for (const auto& i : pflab::all_subsets(big, m))
        sum += minors.of(i) * pflab::det(submatrix(t, IndexSet::full(m), i));
      CHECK(pflab::block_pfaffian_msf(t, a) == sum);
    }
  }

  CHECK_THROWS_AS(
      pflab::block_pfaffian_msf(Matrix<BigRational>(2, 3), SkewMatrix<BigRational>(4)),
      pflab::DimensionMismatch);
  CHECK_THROWS_AS(
      pflab::block_pfaffian_msf(Matrix<BigRational>(3, 4), SkewMatrix<BigRational>(4)),
      pflab::OddSize);
}

TEST_CASE("matrix text roundtrip") {
  Rng rng(1357);
  const std::vector<pflab::VarId> pool = {pflab::vars::q(), pflab::vars::x(1),
                                          pflab::vars::x(2)};
  Matrix<Poly> m(2, 3);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) m.set(i, j, pflab::testutil::random_poly(rng, pool, 3, 3, 9));
  const std::string text = pflab::matrix_to_text(m);
  CHECK(pflab::matrix_from_text(text) == m);

  const auto a = pflab::skew_symbol_matrix(4);
  CHECK(pflab::skew_from_text(pflab::skew_to_text(a)) == a);

  CHECK_THROWS_AS(pflab::matrix_from_text("2"), pflab::ParseError);
  CHECK_THROWS_AS(pflab::matrix_from_text("1 2\nq"), pflab::ParseError);
  CHECK_THROWS_AS(pflab::matrix_from_text("x 2\nq\nq"), pflab::ParseError);
  CHECK_THROWS_AS(pflab::skew_from_text("2 2\n0"), pflab::ParseError);
  CHECK_THROWS_AS(pflab::skew_from_text("skew 3\nq\nq"), pflab::ParseError);
}
