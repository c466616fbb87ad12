#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"
#include "pflab/partitions.hpp"
#include "pflab/poly.hpp"
#include "pflab/ratfun.hpp"
#include "pflab/series.hpp"
#include "pflab/variables.hpp"
#include "test_util.hpp"

using pflab::Partition;
using pflab::PerfectMatching;
using pflab::Poly;

TEST_CASE("partition parsing, printing, conjugation") {
  const auto lam = Partition::parse("[4,3,1,1]");
  CHECK(lam.to_string() == "[4,3,1,1]");
  CHECK(lam.size() == 9);
  CHECK(lam.length() == 4);
  CHECK(lam.part(1) == 4);
  CHECK(lam.part(5) == 0);
  CHECK(lam.contains(1, 4));
  CHECK(!lam.contains(2, 4));
  CHECK(Partition::parse("[]").length() == 0);
  CHECK(Partition::parse(" [ 2 , 1 ] ").to_string() == "[2,1]");
  CHECK(Partition::parse("[3,0]").to_string() == "[3]");
  CHECK_THROWS_AS(Partition::parse("4,3"), pflab::ParseError);
  CHECK_THROWS_AS(Partition::parse("[1,2]"), pflab::ParseError);
  CHECK_THROWS_AS(Partition::parse("[2,]"), pflab::ParseError);
  CHECK_THROWS_AS(Partition::parse("[2] x"), pflab::ParseError);

  CHECK(lam.conjugate().to_string() == "[4,2,2,1]");
  for (const auto& p : pflab::enumerate_partitions(8)) {
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().size() == p.size());
  }
}

TEST_CASE("hook lengths") {
  const auto lam = Partition::parse("[4,3,1,1]");
  std::multiset<long> hooks;
  for (auto [i, j] : lam.cells()) hooks.insert(pflab::hook(lam, i, j));
  CHECK(hooks == std::multiset<long>{1, 1, 1, 2, 2, 3, 4, 5, 7});
  CHECK_THROWS_AS(pflab::hook(lam, 2, 4), pflab::CellOutsidePartition);
  CHECK_THROWS_AS(pflab::hook(lam, 5, 1), pflab::CellOutsidePartition);

  // hook multiset is conjugation invariant, and the two-shape hook at
  // mu = lambda reduces to the ordinary hook
  for (const auto& p : pflab::enumerate_partitions(8)) {
    std::multiset<long> own, conj;
    const auto pc = p.conjugate();
    for (auto [i, j] : p.cells()) {
      own.insert(pflab::hook(p, i, j));
      CHECK(pflab::hook_two(p, p, i, j) == pflab::hook(p, i, j));
    }
    for (auto [i, j] : pc.cells()) conj.insert(pflab::hook(pc, i, j));
    CHECK(own == conj);
  }
}

TEST_CASE("two-shape hooks on a spot pair") {
  const auto lam = Partition::parse("[4,3,1,1]");
  const auto mu = Partition::parse("[3,3]");
  const std::vector<std::vector<long>> grid = {{5, 4, 3, 0}, {3, 2, 1}, {0}, {-1}};
  for (int i = 1; i <= lam.length(); ++i)
    for (long j = 1; j <= lam.part(i); ++j)
      CHECK(pflab::hook_two(lam, mu, i, static_cast<int>(j)) == grid[i - 1][j - 1]);
  CHECK_THROWS_AS(pflab::hook_two(mu, lam, 1, 4), pflab::CellOutsidePartition);
}

TEST_CASE("n statistics") {
  CHECK(pflab::n_stat(Partition::parse("[4,3,1,1]")) == 8);
  for (const auto& p : pflab::enumerate_partitions(8)) {
    long by_cols = 0;
    const auto pc = p.conjugate();
    for (int j = 1; j <= pc.length(); ++j) by_cols += pc.part(j) * (pc.part(j) - 1) / 2;
    CHECK(pflab::n_stat(p) == by_cols);
    CHECK(pflab::n_two(p, Partition()) == pflab::n_stat(p));
  }

  const auto lam = Partition::parse("[4,3,1,1]");
  const auto mu = Partition::parse("[3,3]");
  CHECK(pflab::n_two(lam, mu) == 1);
  CHECK(pflab::n_two(mu, lam) == 0);
  CHECK(pflab::diagram_difference(lam, mu) == 3);
  CHECK(pflab::diagram_difference(mu, lam) == 0);

  // implementation sums lambda'_j - i; the companion form sums i - mu'_j - 1
  const auto mu_form = [](const Partition& l, const Partition& m) {
    long total = 0;
    const auto mc = m.conjugate();
    for (auto [i, j] : l.cells())
      if (!m.contains(i, j)) total += i - mc.part(j) - 1;
    return total;
  };
  const auto box = pflab::enumerate_partitions(16, 4, 4);
  CHECK(box.size() == 70); // 4x4 box
  for (const auto& l : box)
    for (const auto& m : box) CHECK(pflab::n_two(l, m) == mu_form(l, m));
}

TEST_CASE("exponent statistics for shape pairs") {
  const auto lam = Partition::parse("[4,3,1,1]");
  const auto mu = Partition::parse("[3,3]");
  const auto st = pflab::pq_stats(lam, mu, 4);
  CHECK(st.p == 64);
  CHECK(st.q == 4);
  CHECK(st.lambda_minus_mu == 3);
  CHECK(st.mu_minus_lambda == 0);

  const auto zero = pflab::pq_stats(Partition(), Partition(), 1);
  CHECK(zero.p == 0);
  CHECK(zero.q == 0);
  CHECK(zero.lambda_minus_mu == 0);
  CHECK(zero.mu_minus_lambda == 0);

  CHECK_THROWS_AS(pflab::pq_stats(lam, mu, 3), pflab::LengthExceedsN);

  // |l-m| + |m-l| + 2n(l,m) + 2n(m,l) + P - Q == sum (2i-1)(k_i + l_i)
  const auto balance = [](const Partition& l, const Partition& m, int n) {
    const auto s = pflab::pq_stats(l, m, n);
    const long lhs = s.lambda_minus_mu + s.mu_minus_lambda + 2 * pflab::n_two(l, m) +
                     2 * pflab::n_two(m, l) + s.p - s.q;
    long rhs = 0;
    for (int i = 1; i <= n; ++i) rhs += (2L * i - 1) * (l.part(i) + m.part(i) + 2L * (n - i));
    return std::pair<long, long>{lhs, rhs};
  };

  const auto spot = balance(lam, mu, 4);
  CHECK(spot.first == 65);
  CHECK(spot.second == 65);

  for (int n = 1; n <= 4; ++n) {
    const auto shapes = pflab::enumerate_partitions(3L * n, 3, n);
    for (const auto& l : shapes) {
      for (const auto& m : shapes) {
        const auto [lhs, rhs] = balance(l, m, n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("partition enumeration order") {
  std::vector<std::string> got;
  for (const auto& p : pflab::enumerate_partitions(3)) got.push_back(p.to_string());
  CHECK(got == std::vector<std::string>{"[]", "[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[1,1,1]"});

  CHECK(pflab::enumerate_partitions(0).size() == 1);
  CHECK(pflab::enumerate_partitions(8).size() == 67);

  got.clear();
  for (const auto& p : pflab::enumerate_partitions(4, -1, 2)) got.push_back(p.to_string());
  CHECK(got == std::vector<std::string>{"[]", "[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[4]",
                                        "[3,1]", "[2,2]"});

  const auto all = pflab::enumerate_partitions(8);
  std::set<std::string> uniq;
  for (const auto& p : all) uniq.insert(p.to_string());
  CHECK(uniq.size() == all.size());
}

TEST_CASE("matching enumeration") {
  CHECK(pflab::enumerate_matchings(0).size() == 1);
  CHECK(pflab::enumerate_matchings(2).size() == 1);
  CHECK(pflab::enumerate_matchings(4).size() == 3);
  CHECK(pflab::enumerate_matchings(8).size() == 105);
  CHECK_THROWS_AS(pflab::enumerate_matchings(3), pflab::OddSize);
  CHECK_THROWS_AS(pflab::enumerate_matchings(-2), pflab::OddSize);

  const auto m4 = pflab::enumerate_matchings(4);
  REQUIRE(m4.size() == 3);
  CHECK(m4[0] == PerfectMatching{{1, 2}, {3, 4}});
  CHECK(m4[1] == PerfectMatching{{1, 3}, {2, 4}});
  CHECK(m4[2] == PerfectMatching{{1, 4}, {2, 3}});
}

TEST_CASE("matching signs") {
  CHECK(pflab::matching_sign(PerfectMatching{}) == 1);
  CHECK(pflab::matching_sign({{1, 2}}) == 1);
  CHECK(pflab::matching_sign({{1, 2}, {3, 4}}) == 1);
  CHECK(pflab::matching_sign({{1, 3}, {2, 4}}) == -1);
  CHECK(pflab::matching_sign({{1, 4}, {2, 3}}) == 1);
  CHECK(pflab::matching_sign({{1, 4}, {2, 5}, {3, 6}}) == -1);
  CHECK(pflab::matching_sign({{4, 1}, {5, 2}, {6, 3}}) == -1); // pair order immaterial
  CHECK_THROWS_AS(pflab::matching_sign({{1, 1}}), pflab::NotAMatching);
  CHECK_THROWS_AS(pflab::matching_sign({{1, 3}}), pflab::NotAMatching);
  CHECK_THROWS_AS(pflab::matching_sign({{1, 2}, {2, 3}}), pflab::NotAMatching);

  // crossing parity equals the sign of the flattened word, and from size 4 on
  // both signs occur
  for (int n = 2; n <= 10; n += 2) {
    long expected = 1;
    for (int k = n - 1; k > 0; k -= 2) expected *= k;
    const auto all = pflab::enumerate_matchings(n);
    CHECK(static_cast<long>(all.size()) == expected);
    long plus = 0, minus = 0;
    for (const auto& m : all) {
      std::vector<int> word;
      for (auto [a, b] : m) {
        word.push_back(a);
        word.push_back(b);
      }
      const int sign = pflab::matching_sign(m);
      CHECK(sign == pflab::permutation_sign(word));
      (sign > 0 ? plus : minus) += 1;
    }
    if (n >= 4) {
      CHECK(plus > 0);
      CHECK(minus > 0);
    }
  }
}

TEST_CASE("permutation signs") {
  CHECK(pflab::permutation_sign({}) == 1);
  CHECK(pflab::permutation_sign({1, 2, 3}) == 1);
  CHECK(pflab::permutation_sign({2, 1, 3}) == -1);
  CHECK(pflab::permutation_sign({2, 4, 1, 3}) == -1); // inversions (2,1),(4,1),(4,3)
  CHECK_THROWS_AS(pflab::permutation_sign({1, 1}), pflab::Error);

  pflab::testutil::Rng rng(20260822);
  const auto shuffle = [&rng](int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
    return perm;
  };
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = shuffle(8);
    const auto b = shuffle(8);
    std::vector<int> ab(8);
    for (int i = 0; i < 8; ++i) ab[i] = a[b[i] - 1];
    CHECK(pflab::permutation_sign(ab) ==
          pflab::permutation_sign(a) * pflab::permutation_sign(b));
  }
}

TEST_CASE("shuffle signs") {
  CHECK(pflab::shuffle_sign({}, 4) == 1);
  CHECK(pflab::shuffle_sign({1, 2}, 4) == 1);
  CHECK(pflab::shuffle_sign({1, 2, 3, 4}, 4) == 1);
  // merge word (2,4,1,3) has the inversions (2,1),(4,1),(4,3)
  CHECK(pflab::shuffle_sign({2, 4}, 4) == -1);
  CHECK(pflab::shuffle_sign({4, 2}, 4) == -1); // input order immaterial
  CHECK(pflab::shuffle_sign({7}, std::vector<int>{3, 7, 9}) == -1);
  CHECK_THROWS_AS(pflab::shuffle_sign({5}, 4), pflab::NotASubset);
  CHECK_THROWS_AS(pflab::shuffle_sign({2, 2}, 4), pflab::NotASubset);

  // even-size subsets I of {1..2N}: (-1)^s == (-1)^{sum(I) - #I/2}
  for (int half = 1; half <= 4; ++half) {
    const int n = 2 * half;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      long sum = 0;
      for (int v = 1; v <= n; ++v) {
        if (mask & (1u << (v - 1))) {
          subset.push_back(v);
          sum += v;
        }
      }
      if (subset.size() % 2 != 0) continue;
      const long mprime = static_cast<long>(subset.size()) / 2;
      const int expected = (sum - mprime) % 2 == 0 ? 1 : -1;
      CHECK(pflab::shuffle_sign(subset, n) == expected);
    }
  }
}

TEST_CASE("hook product identities") {
  const auto policy = pflab::TruncationPolicy::none();
  const Poly q = Poly::variable(pflab::vars::q());
  const Poly one = Poly::one();
  const auto qpow = [&](long e) { return q.pow(static_cast<unsigned long>(e)); };

  for (const auto& lam : pflab::enumerate_partitions(8)) {
    const int n = std::max(lam.length(), 4);
    std::vector<long> ell(n);
    for (int i = 1; i <= n; ++i) ell[i - 1] = lam.part(i) + n - i;

    Poly hooks_minus = one, hooks_plus = one;
    for (auto [i, j] : lam.cells()) {
      const long h = pflab::hook(lam, i, j);
      hooks_minus *= one - qpow(h);
      hooks_plus *= one + qpow(h);
    }

    Poly diffs_minus = one, diffs_plus = one;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        diffs_minus *= one - qpow(ell[i] - ell[j]);
        diffs_plus *= one + qpow(ell[i] - ell[j]);
      }
    }

    Poly poch_q = one, poch_mq = one;
    for (long e : ell) {
      poch_q *= pflab::pochhammer(q, e, policy);
      poch_mq *= pflab::pochhammer(-q, e, policy);
    }

    // prod (1 - q^h) = prod (q)_{l_i} / prod_{i<j} (1 - q^{l_i - l_j}),
    // and the mirrored product with every minus flipped to plus
    CHECK(hooks_minus * diffs_minus == poch_q);
    CHECK(hooks_plus * diffs_plus == poch_mq);

    // ratio form: prod (1+q^h)/(1-q^h) as one rational-function identity
    pflab::RationalFunction lhs(one, one), rhs(one, one);
    for (auto [i, j] : lam.cells()) {
      const long h = pflab::hook(lam, i, j);
      lhs = lhs * pflab::RationalFunction(one + qpow(h), one - qpow(h));
    }
    for (long e : ell)
      rhs = rhs * pflab::RationalFunction(pflab::pochhammer(-q, e, policy),
                                          pflab::pochhammer(q, e, policy));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        rhs = rhs * pflab::RationalFunction(one - qpow(ell[i] - ell[j]),
                                            one + qpow(ell[i] - ell[j]));
    CHECK(lhs == rhs);
  }
}
