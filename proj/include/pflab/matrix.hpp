#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/poly.hpp"
#include "pflab/ratfun.hpp"

namespace pflab {

// Uniform access to the ring operations the matrix algorithms need, for the
// three entry types in use: exact rationals, polynomials, rational functions.
template <typename R>
struct Ring;

template <>
struct Ring<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& v) { return v == 0; }
  static BigRational exact_div(const BigRational& a, const BigRational& b) {
    if (b == 0) throw NotAUnit("division by zero");
    return a / b;
  }
  static std::string text(const BigRational& v) { return rat_to_string(v); }
};

template <>
struct Ring<Poly> {
  static Poly zero() { return Poly::zero(); }
  static Poly one() { return Poly::one(); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  static Poly exact_div(const Poly& a, const Poly& b) { return poly_exact_div(a, b); }
  static std::string text(const Poly& p) { return p.to_string(); }
};

template <>
struct Ring<RationalFunction> {
  static RationalFunction zero() { return RationalFunction::zero(); }
  static RationalFunction one() { return RationalFunction::one(); }
  static bool is_zero(const RationalFunction& v) { return v.is_zero(); }
  static RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) {
    return a / b;
  }
  static std::string text(const RationalFunction& v) { return v.to_string(); }
};

// Sorted set of 1-based row/column indices. weight() is the index sum that
// the sign exponents of the Jacobi-type formulas depend on.
class IndexSet {
public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> elements);
  static IndexSet full(int n); // {1,...,n}

  int count() const { return static_cast<int>(m_elems.size()); }
  bool empty() const { return m_elems.empty(); }
  long weight() const;
  int at(int k) const; // 1-based k-th smallest
  bool contains(int v) const;
  const std::vector<int>& elems() const { return m_elems; }

  IndexSet complement(int n) const; // [n] \ I; requires max element <= n
  IndexSet unite(const IndexSet& o) const;
  IndexSet without(int v) const;

  std::string to_string() const; // {1,3,4}
  bool operator==(const IndexSet& o) const { return m_elems == o.m_elems; }
  bool operator!=(const IndexSet& o) const { return !(*this == o); }

private:
  std::vector<int> m_elems;
};

// All r-element subsets of {1..n} in lexicographic order.
std::vector<IndexSet> all_subsets(int n, int r);

template <typename R>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : m_rows(rows), m_cols(cols),
        m_entries(check_extent(rows, cols), Ring<R>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, i, Ring<R>::one());
    return m;
  }

  // J_n, ones on the anti-diagonal.
  static Matrix reversal(int n) {
    Matrix m(n, n);
    for (int i = 1; i <= n; ++i) m.set(i, n + 1 - i, Ring<R>::one());
    return m;
  }

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  const R& at(int i, int j) const { return m_entries[offset(i, j)]; }
  void set(int i, int j, R v) { m_entries[offset(i, j)] = std::move(v); }

  Matrix transpose() const {
    Matrix out(m_cols, m_rows);
    for (int i = 1; i <= m_rows; ++i)
      for (int j = 1; j <= m_cols; ++j) out.set(j, i, at(i, j));
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_entries.size(); ++k)
      out.m_entries[k] = m_entries[k] + o.m_entries[k];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_entries.size(); ++k)
      out.m_entries[k] = m_entries[k] - o.m_entries[k];
    return out;
  }

  Matrix operator-() const {
    Matrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_entries.size(); ++k) out.m_entries[k] = -m_entries[k];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (m_cols != o.m_rows) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(m_rows, o.m_cols);
    for (int i = 1; i <= m_rows; ++i) {
      for (int j = 1; j <= o.m_cols; ++j) {
        R acc = Ring<R>::zero();
        for (int k = 1; k <= m_cols; ++k) acc = acc + at(i, k) * o.at(k, j);
        out.set(i, j, std::move(acc));
      }
    }
    return out;
  }

  Matrix scaled(const R& c) const {
    Matrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_entries.size(); ++k) out.m_entries[k] = m_entries[k] * c;
    return out;
  }

  bool operator==(const Matrix& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols) return false;
    for (std::size_t k = 0; k < m_entries.size(); ++k)
      if (!(m_entries[k] == o.m_entries[k])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  static std::size_t check_extent(int rows, int cols) {
    if (rows < 0 || cols < 0) throw IndexOutOfRange("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  void require_same_shape(const Matrix& o) const {
    if (m_rows != o.m_rows || m_cols != o.m_cols)
      throw DimensionMismatch("matrix shapes differ: " + std::to_string(m_rows) + "x" +
                              std::to_string(m_cols) + " vs " + std::to_string(o.m_rows) +
                              "x" + std::to_string(o.m_cols));
  }

  std::size_t offset(int i, int j) const {
    if (i < 1 || i > m_rows || j < 1 || j > m_cols)
      throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside " + std::to_string(m_rows) + "x" +
                            std::to_string(m_cols));
    return static_cast<std::size_t>(i - 1) * m_cols + (j - 1);
  }

  int m_rows = 0;
  int m_cols = 0;
  std::vector<R> m_entries;
};

// T^I_J: rows picked by I, columns by J, both in increasing order.
template <typename R>
Matrix<R> submatrix(const Matrix<R>& m, const IndexSet& rows, const IndexSet& cols) {
  Matrix<R> out(rows.count(), cols.count());
  for (int i = 1; i <= rows.count(); ++i)
    for (int j = 1; j <= cols.count(); ++j) out.set(i, j, m.at(rows.at(i), cols.at(j)));
  return out;
}

// Writes `block` into `dst` with its top-left corner at (row0, col0), 1-based.
template <typename R>
void paste(Matrix<R>& dst, int row0, int col0, const Matrix<R>& block) {
  for (int i = 1; i <= block.rows(); ++i)
    for (int j = 1; j <= block.cols(); ++j)
      dst.set(row0 + i - 1, col0 + j - 1, block.at(i, j));
}

// Skew symmetric matrix storing the strict upper triangle; a_ji = -a_ij and
// a_ii = 0 are implied. Any size can be stored; Pfaffians require even size.
template <typename R>
class SkewMatrix {
public:
  SkewMatrix() = default;
  explicit SkewMatrix(int n) : m_size(n), m_upper(upper_extent(n), Ring<R>::zero()) {}

  // Validates exact skew symmetry of a full square matrix.
  static SkewMatrix from_full(const Matrix<R>& m) {
    if (m.rows() != m.cols()) throw NotSquare("skew matrix must be square");
    SkewMatrix out(m.rows());
    for (int i = 1; i <= m.rows(); ++i) {
      if (!Ring<R>::is_zero(m.at(i, i))) throw Error("nonzero diagonal in skew matrix");
      for (int j = i + 1; j <= m.cols(); ++j) {
        if (!(m.at(j, i) == -m.at(i, j))) throw Error("matrix is not skew symmetric");
        out.set_upper(i, j, m.at(i, j));
      }
    }
    return out;
  }

  int size() const { return m_size; }

  R at(int i, int j) const {
    check(i);
    check(j);
    if (i == j) return Ring<R>::zero();
    if (i < j) return m_upper[offset(i, j)];
    return -m_upper[offset(j, i)];
  }

  void set_upper(int i, int j, R v) {
    check(i);
    check(j);
    if (i >= j) throw IndexOutOfRange("set_upper needs i < j");
    m_upper[offset(i, j)] = std::move(v);
  }

  Matrix<R> full() const {
    Matrix<R> out(m_size, m_size);
    for (int i = 1; i <= m_size; ++i)
      for (int j = i + 1; j <= m_size; ++j) {
        out.set(i, j, at(i, j));
        out.set(j, i, at(j, i));
      }
    return out;
  }

  // A^I_I in increasing index order.
  SkewMatrix principal(const IndexSet& keep) const {
    SkewMatrix out(keep.count());
    for (int i = 1; i <= keep.count(); ++i)
      for (int j = i + 1; j <= keep.count(); ++j)
        out.set_upper(i, j, at(keep.at(i), keep.at(j)));
    return out;
  }

  // A^pi with entries a_{pi(i) pi(j)}; pi is a permutation word of {1..n}.
  SkewMatrix reindexed(const std::vector<int>& pi) const {
    if (static_cast<int>(pi.size()) != m_size)
      throw DimensionMismatch("permutation length must match matrix size");
    SkewMatrix out(m_size);
    for (int i = 1; i <= m_size; ++i)
      for (int j = i + 1; j <= m_size; ++j)
        out.set_upper(i, j, at(pi[i - 1], pi[j - 1]));
    return out;
  }

  SkewMatrix scaled(const R& c) const {
    SkewMatrix out(m_size);
    for (int i = 1; i <= m_size; ++i)
      for (int j = i + 1; j <= m_size; ++j) out.set_upper(i, j, at(i, j) * c);
    return out;
  }

  SkewMatrix negated() const {
    SkewMatrix out(m_size);
    for (int i = 1; i <= m_size; ++i)
      for (int j = i + 1; j <= m_size; ++j) out.set_upper(i, j, -at(i, j));
    return out;
  }

  bool operator==(const SkewMatrix& o) const {
    if (m_size != o.m_size) return false;
    for (std::size_t k = 0; k < m_upper.size(); ++k)
      if (!(m_upper[k] == o.m_upper[k])) return false;
    return true;
  }
  bool operator!=(const SkewMatrix& o) const { return !(*this == o); }

private:
  static std::size_t upper_extent(int n) {
    if (n < 0) throw IndexOutOfRange("negative matrix dimension");
    if (n <= 1) return 0;
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }

  void check(int i) const {
    if (i < 1 || i > m_size)
      throw IndexOutOfRange("skew matrix index " + std::to_string(i) + " outside size " +
                            std::to_string(m_size));
  }

  // Strict upper triangle, row-major: (1,2),(1,3),...,(1,n),(2,3),...
  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * (2 * m_size - i) / 2 + (j - i - 1);
  }

  int m_size = 0;
  std::vector<R> m_upper;
};

} // namespace pflab
