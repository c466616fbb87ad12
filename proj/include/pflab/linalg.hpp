#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pflab/matchings.hpp"
#include "pflab/matrix.hpp"

namespace pflab {

// Cofactor expansion along the first row. Exponential; the oracle for the
// fraction-free path and the route of choice for rational-function entries,
// where exact division would multiply denominators instead of cancelling.
template <typename R>
R det_cofactor(const Matrix<R>& m);

// Bareiss one-step fraction-free elimination. Every division is exact in the
// ring, so Poly entries never leave the polynomial ring.
template <typename R>
R det_bareiss(Matrix<R> m);

Poly det(const Matrix<Poly>& m);
BigRational det(const Matrix<BigRational>& m);
RationalFunction det(const Matrix<RationalFunction>& m);

// Sum over perfect matchings, the defining formula. (n-1)!! terms.
template <typename R>
R pfaffian_combinatorial(const SkewMatrix<R>& a);

// Sub-Pfaffians of one matrix share structure: this caches Pf(A^S_S) per
// surviving index subset (bitmask key), expanding along the least index.
// O(2^n) cached values instead of (n-1)!! terms per query.
template <typename R>
class PfaffianMemo {
public:
  explicit PfaffianMemo(const SkewMatrix<R>& a) : m_a(a) {
    if (a.size() > 62) throw ExplosionGuard("pfaffian cache keyed by 62-bit masks");
  }

  R of(const IndexSet& keep) {
    std::uint64_t mask = 0;
    for (int v : keep.elems()) {
      if (v > m_a.size()) throw IndexOutOfRange("pfaffian index outside the matrix");
      mask |= std::uint64_t(1) << (v - 1);
    }
    return of_mask(mask);
  }

  R of_mask(std::uint64_t mask) {
    if (mask == 0) return Ring<R>::one();
    if (std::popcount(mask) % 2 != 0) throw OddSize("pfaffian needs an even index set");
    auto it = m_cache.find(mask);
    if (it != m_cache.end()) return it->second;

    std::vector<int> verts;
    for (int v = 1; v <= m_a.size(); ++v)
      if (mask & (std::uint64_t(1) << (v - 1))) verts.push_back(v);

    // Pf(A^S) = sum_{t=2..k} (-1)^t a_{s_1 s_t} Pf(A^{S \ {s_1, s_t}})
    R acc = Ring<R>::zero();
    const int s1 = verts.front();
    for (std::size_t t = 1; t < verts.size(); ++t) {
      const R entry = m_a.at(s1, verts[t]);
      if (Ring<R>::is_zero(entry)) continue;
      const std::uint64_t rest =
          mask & ~(std::uint64_t(1) << (s1 - 1)) & ~(std::uint64_t(1) << (verts[t] - 1));
      R term = entry * of_mask(rest);
      if (t % 2 == 0) term = -term;
      acc = acc + term;
    }
    m_cache.emplace(mask, acc);
    return acc;
  }

private:
  const SkewMatrix<R>& m_a;
  std::unordered_map<std::uint64_t, R> m_cache;
};

template <typename R>
R pfaffian(const SkewMatrix<R>& a) {
  if (a.size() % 2 != 0) throw OddSize("pfaffian of odd-size matrix");
  if (a.size() == 0) return Ring<R>::one();
  PfaffianMemo<R> memo(a);
  std::uint64_t mask = (std::uint64_t(1) << a.size()) - 1;
  return memo.of_mask(mask);
}

// Pf(A^I_I) for an even-size subset.
template <typename R>
R pf_minor(const SkewMatrix<R>& a, const IndexSet& keep) {
  if (keep.count() % 2 != 0) throw OddSize("pfaffian needs an even index set");
  return pfaffian(a.principal(keep));
}

// Pfaffian of (a_{s_u s_v})_{u<v} for an arbitrary index sequence: order
// contributes the permutation sign, a repeated index makes the value 0.
template <typename R>
R pf_seq(const SkewMatrix<R>& a, const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  if (k % 2 != 0) throw OddSize("pfaffian needs an even index sequence");
  SkewMatrix<R> b(k);
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) b.set_upper(u, v, a.at(seq[u - 1], seq[v - 1]));
  return pfaffian(b);
}

// The matrix of gamma(i,j) = (-1)^{i+j-1} Pf(A with rows/cols i,j removed),
// skew-extended. Satisfies transpose(Ahat) * A = Pf(A) * E.
template <typename R>
SkewMatrix<R> copfaffian_matrix(const SkewMatrix<R>& a) {
  const int n = a.size();
  if (n % 2 != 0 || n < 2) throw OddSize("copfaffian matrix needs even size >= 2");
  PfaffianMemo<R> memo(a);
  const std::uint64_t everything = (std::uint64_t(1) << n) - 1;
  SkewMatrix<R> out(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::uint64_t rest =
          everything & ~(std::uint64_t(1) << (i - 1)) & ~(std::uint64_t(1) << (j - 1));
      R value = memo.of_mask(rest);
      if ((i + j - 1) % 2 != 0) value = -value;
      out.set_upper(i, j, std::move(value));
    }
  }
  return out;
}

// Pf(T A tT) for T of shape m x N, A skew N x N, m even.
template <typename R>
R block_pfaffian_msf(const Matrix<R>& t, const SkewMatrix<R>& a) {
  if (t.cols() != a.size()) throw DimensionMismatch("T columns must match A size");
  if (t.rows() % 2 != 0) throw OddSize("Pf(T A tT) needs an even number of rows");
  const Matrix<R> q = t * a.full() * t.transpose();
  return pfaffian(SkewMatrix<R>::from_full(q));
}

// ---- named matrices ----

// P_n(s,t): entry (i,j), i<j, is s^{(i-1) mod 2 + j mod 2} * t^{j-i-1};
// the two-argument form substitutes the given polynomials (0^0 = 1).
SkewMatrix<Poly> p_matrix(int n, const Poly& s, const Poly& t);
SkewMatrix<Poly> p_matrix(int n); // in the variables s, t

SkewMatrix<Poly> s_matrix(int n); // P_n(1,1): upper entries all 1
SkewMatrix<Poly> t_matrix(int n); // P_n(0,1): entry 1 iff i odd and j even

// [[O, J],[-J, O]] and [[O, E],[-E, O]] with m x m blocks, n = 2m.
template <typename R>
SkewMatrix<R> k_block_matrix(int n) {
  if (n % 2 != 0) throw OddSize("block matrix needs even size");
  SkewMatrix<R> out(n);
  for (int i = 1; i <= n / 2; ++i) out.set_upper(i, n + 1 - i, Ring<R>::one());
  return out;
}

template <typename R>
SkewMatrix<R> l_block_matrix(int n) {
  if (n % 2 != 0) throw OddSize("block matrix needs even size");
  SkewMatrix<R> out(n);
  for (int i = 1; i <= n / 2; ++i) out.set_upper(i, i + n / 2, Ring<R>::one());
  return out;
}

// Generic skew matrix with entry (i,j) the fresh variable <prefix>ij.
// Single-digit indices only, which covers every display-size use.
SkewMatrix<Poly> skew_symbol_matrix(int n, const std::string& prefix = "a");

// ---- text form ----
// Matrices: "rows cols" then row-major entries, one compact Poly per token.
// Skew matrices: "skew N" then the strict upper triangle row-major.
std::string matrix_to_text(const Matrix<Poly>& m);
Matrix<Poly> matrix_from_text(const std::string& text);
std::string skew_to_text(const SkewMatrix<Poly>& a);
SkewMatrix<Poly> skew_from_text(const std::string& text);

// ---- implementation ----

template <typename R>
R det_cofactor_live(const Matrix<R>& m, int row, std::vector<int>& cols) {
  if (cols.empty()) return Ring<R>::one();
  R acc = Ring<R>::zero();
  for (std::size_t t = 0; t < cols.size(); ++t) {
    const R& entry = m.at(row, cols[t]);
    if (Ring<R>::is_zero(entry)) continue;
    const int dropped = cols[t];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(t));
    R term = entry * det_cofactor_live(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(t), dropped);
    if (t % 2 != 0) term = -term;
    acc = acc + term;
  }
  return acc;
}

template <typename R>
R det_cofactor(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  std::vector<int> cols;
  for (int j = 1; j <= m.cols(); ++j) cols.push_back(j);
  return det_cofactor_live(m, 1, cols);
}

template <typename R>
R det_bareiss(Matrix<R> m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Ring<R>::one();
  R prev = Ring<R>::one();
  bool negate = false;
  for (int k = 1; k < n; ++k) {
    if (Ring<R>::is_zero(m.at(k, k))) {
      int pivot = 0;
      for (int r = k + 1; r <= n; ++r) {
        if (!Ring<R>::is_zero(m.at(r, k))) {
          pivot = r;
          break;
        }
      }
      if (pivot == 0) return Ring<R>::zero();
      for (int j = 1; j <= n; ++j) {
        R tmp = m.at(k, j);
        m.set(k, j, m.at(pivot, j));
        m.set(pivot, j, std::move(tmp));
      }
      negate = !negate;
    }
    for (int i = k + 1; i <= n; ++i) {
      for (int j = k + 1; j <= n; ++j) {
        R numer = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.set(i, j, Ring<R>::exact_div(numer, prev));
      }
    }
    prev = m.at(k, k);
  }
  R result = m.at(n, n);
  return negate ? -result : result;
}

template <typename R>
R pfaffian_combinatorial(const SkewMatrix<R>& a) {
  const int n = a.size();
  if (n % 2 != 0) throw OddSize("pfaffian of odd-size matrix");
  R acc = Ring<R>::zero();
  for (const PerfectMatching& m : enumerate_matchings(n)) {
    R prod = matching_sign(m) > 0 ? Ring<R>::one() : -Ring<R>::one();
    for (const auto& [u, v] : m) prod = prod * a.at(u, v);
    acc = acc + prod;
  }
  return acc;
}

} // namespace pflab
