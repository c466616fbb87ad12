#pragma once

#include <utility>
#include <vector>

#include "pflab/variables.hpp"

namespace pflab {

// Power product with sparse exponent storage, sorted by VarId ascending and
// free of zero exponents. The total degree is cached because the graded part
// of the monomial order is consulted on every comparison.
class Monomial {
public:
  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial var(VarId v, long e = 1) {
    Monomial m;
    if (e != 0) {
      m.m_exps.emplace_back(v, e);
      m.m_degree = e;
    }
    return m;
  }

  bool is_one() const { return m_exps.empty(); }
  long degree() const { return m_degree; }
  const std::vector<std::pair<VarId, long>>& exponents() const { return m_exps; }

  long exponent(VarId v) const {
    for (const auto& [var, e] : m_exps)
      if (var == v) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial out;
    out.m_exps.reserve(m_exps.size() + o.m_exps.size());
    auto i = m_exps.begin();
    auto j = o.m_exps.begin();
    while (i != m_exps.end() || j != o.m_exps.end()) {
      if (j == o.m_exps.end() || (i != m_exps.end() && i->first < j->first)) {
        out.m_exps.push_back(*i++);
      } else if (i == m_exps.end() || j->first < i->first) {
        out.m_exps.push_back(*j++);
      } else {
        out.m_exps.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out.m_degree = m_degree + o.m_degree;
    return out;
  }

  bool divides(const Monomial& m) const {
    auto i = m_exps.begin();
    auto j = m.m_exps.begin();
    while (i != m_exps.end()) {
      while (j != m.m_exps.end() && j->first < i->first) ++j;
      if (j == m.m_exps.end() || j->first != i->first || j->second < i->second) return false;
      ++i;
    }
    return true;
  }

  // Quotient m / this; caller guarantees divides(m).
  Monomial divide_into(const Monomial& m) const {
    Monomial out;
    auto i = m_exps.begin();
    for (const auto& [var, e] : m.m_exps) {
      long sub = 0;
      if (i != m_exps.end() && i->first == var) {
        sub = i->second;
        ++i;
      }
      if (e - sub != 0) out.m_exps.emplace_back(var, e - sub);
    }
    out.m_degree = m.m_degree - m_degree;
    return out;
  }

  // Exponent of v dropped entirely (used for coefficient extraction).
  Monomial without(VarId v) const {
    Monomial out;
    for (const auto& [var, e] : m_exps) {
      if (var == v) continue;
      out.m_exps.emplace_back(var, e);
      out.m_degree += e;
    }
    return out;
  }

  bool operator==(const Monomial& o) const { return m_exps == o.m_exps; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Graded lexicographic: total degree first, ties broken by the exponent of
  // the earliest registered variable (higher exponent sorts larger).
  static int compare(const Monomial& lhs, const Monomial& rhs) {
    if (lhs.m_degree != rhs.m_degree) return lhs.m_degree < rhs.m_degree ? -1 : 1;
    auto i = lhs.m_exps.begin();
    auto j = rhs.m_exps.begin();
    while (i != lhs.m_exps.end() && j != rhs.m_exps.end()) {
      if (i->first != j->first) {
        // The side owning the earlier variable has a positive exponent there,
        // the other side has zero.
        return i->first < j->first ? 1 : -1;
      }
      if (i->second != j->second) return i->second < j->second ? -1 : 1;
      ++i;
      ++j;
    }
    if (i != lhs.m_exps.end()) return 1;
    if (j != rhs.m_exps.end()) return -1;
    return 0;
  }

private:
  std::vector<std::pair<VarId, long>> m_exps;
  long m_degree = 0;
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

} // namespace pflab
