#include "pflab/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "pflab/variables.hpp"

namespace pflab {

IndexSet::IndexSet(std::vector<int> elements) : m_elems(std::move(elements)) {
  std::sort(m_elems.begin(), m_elems.end());
  for (std::size_t k = 0; k < m_elems.size(); ++k) {
    if (m_elems[k] < 1) throw IndexOutOfRange("index sets hold 1-based indices");
    if (k > 0 && m_elems[k] == m_elems[k - 1]) throw Error("repeated index in index set");
  }
}

IndexSet IndexSet::full(int n) {
  std::vector<int> all(n > 0 ? n : 0);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  return IndexSet(std::move(all));
}

long IndexSet::weight() const {
  long sum = 0;
  for (int v : m_elems) sum += v;
  return sum;
}

int IndexSet::at(int k) const {
  if (k < 1 || k > count()) throw IndexOutOfRange("index set position out of range");
  return m_elems[k - 1];
}

bool IndexSet::contains(int v) const {
  return std::binary_search(m_elems.begin(), m_elems.end(), v);
}

IndexSet IndexSet::complement(int n) const {
  if (!m_elems.empty() && m_elems.back() > n)
    throw IndexOutOfRange("index set does not fit in [n]");
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!contains(v)) rest.push_back(v);
  return IndexSet(std::move(rest));
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  std::vector<int> joined = m_elems;
  joined.insert(joined.end(), o.m_elems.begin(), o.m_elems.end());
  return IndexSet(std::move(joined)); // ctor rejects overlaps
}

IndexSet IndexSet::without(int v) const {
  std::vector<int> rest;
  for (int e : m_elems)
    if (e != v) rest.push_back(e);
  return IndexSet(std::move(rest));
}

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < m_elems.size(); ++k) {
    if (k > 0) out << ',';
    out << m_elems[k];
  }
  out << '}';
  return out.str();
}

namespace {

void subsets_from(int n, int r, int next, std::vector<int>& current,
                  std::vector<IndexSet>& out) {
  if (static_cast<int>(current.size()) == r) {
    out.push_back(IndexSet(current));
    return;
  }
  const int still_needed = r - static_cast<int>(current.size());
  for (int v = next; v <= n - still_needed + 1; ++v) {
    current.push_back(v);
    subsets_from(n, r, v + 1, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<IndexSet> all_subsets(int n, int r) {
  if (r < 0 || r > n) return {};
  std::vector<IndexSet> out;
  std::vector<int> current;
  subsets_from(n, r, 1, current, out);
  return out;
}

Poly det(const Matrix<Poly>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

BigRational det(const Matrix<BigRational>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

RationalFunction det(const Matrix<RationalFunction>& m) { return det_cofactor(m); }

SkewMatrix<Poly> p_matrix(int n, const Poly& s, const Poly& t) {
  SkewMatrix<Poly> out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.set_upper(i, j, s.pow(static_cast<unsigned long>((i - 1) % 2 + j % 2)) *
                              t.pow(static_cast<unsigned long>(j - i - 1)));
  return out;
}

SkewMatrix<Poly> p_matrix(int n) {
  return p_matrix(n, Poly::variable(vars::s()), Poly::variable(vars::t()));
}

SkewMatrix<Poly> s_matrix(int n) { return p_matrix(n, Poly::one(), Poly::one()); }

SkewMatrix<Poly> t_matrix(int n) { return p_matrix(n, Poly::zero(), Poly::one()); }

SkewMatrix<Poly> skew_symbol_matrix(int n, const std::string& prefix) {
  if (n > 9) throw IndexOutOfRange("symbolic skew matrices use single-digit indices");
  SkewMatrix<Poly> out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.set_upper(i, j,
                    Poly::variable(vars::id(prefix + std::to_string(i) + std::to_string(j))));
  return out;
}

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long header_number(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("bad ") + what + " in matrix header: " + tok);
  }
}

} // namespace

std::string matrix_to_text(const Matrix<Poly>& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out << m.at(i, j).to_string(true) << '\n';
  return out.str();
}

Matrix<Poly> matrix_from_text(const std::string& text) {
  const auto toks = tokens_of(text);
  if (toks.size() < 2) throw ParseError("matrix text needs a 'rows cols' header");
  const long rows = header_number(toks[0], "row count");
  const long cols = header_number(toks[1], "column count");
  if (static_cast<long>(toks.size()) != 2 + rows * cols)
    throw ParseError("matrix text has wrong entry count");
  Matrix<Poly> m(static_cast<int>(rows), static_cast<int>(cols));
  std::size_t next = 2;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) m.set(i, j, Poly::parse(toks[next++]));
  return m;
}

std::string skew_to_text(const SkewMatrix<Poly>& a) {
  std::ostringstream out;
  out << "skew " << a.size() << '\n';
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) out << a.at(i, j).to_string(true) << '\n';
  return out.str();
}

SkewMatrix<Poly> skew_from_text(const std::string& text) {
  const auto toks = tokens_of(text);
  if (toks.size() < 2 || toks[0] != "skew")
    throw ParseError("skew matrix text needs a 'skew N' header");
  const long n = header_number(toks[1], "size");
  if (static_cast<long>(toks.size()) != 2 + n * (n - 1) / 2)
    throw ParseError("skew matrix text has wrong entry count");
  SkewMatrix<Poly> a(static_cast<int>(n));
  std::size_t next = 2;
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) a.set_upper(i, j, Poly::parse(toks[next++]));
  return a;
}

} // namespace pflab
