#pragma once

#include <map>
#include <string>
#include <vector>

#include "pflab/monomial.hpp"
#include "pflab/rational.hpp"

namespace pflab {

// Sparse multivariate polynomial over BigRational. Terms are stored in
// descending graded-lex order so iteration yields the canonical term order
// directly; no zero coefficients are ever stored.
class Poly {
public:
  using TermMap = std::map<Monomial, BigRational, GrlexGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(1); }
  static Poly constant(const BigRational& c);
  static Poly term(const BigRational& c, const Monomial& m);
  static Poly variable(VarId v, long e = 1);

  bool is_zero() const { return m_terms.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return m_terms.size(); }
  const TermMap& terms() const { return m_terms; }

  // Zero polynomial reports degree -1.
  long degree() const;
  long degree_in(VarId v) const;

  const Monomial& leading_monomial() const; // throws on zero
  const BigRational& leading_coefficient() const;

  BigRational coefficient(const Monomial& m) const;
  // Sum of the terms whose exponent of v is exactly e, with v removed.
  Poly coefficient_of(VarId v, long e) const;
  // Constant term as a rational.
  BigRational constant_term() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator*(const BigRational& c) const;
  Poly& operator*=(const BigRational& c) { return *this = *this * c; }

  bool operator==(const Poly& o) const { return m_terms == o.m_terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned long e) const;

  // Substitutes `value` for every occurrence of v (exact, no truncation).
  Poly substitute(VarId v, const Poly& value) const;

  // True when every variable occurring in the polynomial is in `allowed`.
  bool uses_only(const std::vector<VarId>& allowed) const;
  std::vector<VarId> variables() const;

  // Canonical text: terms descending graded-lex, " + "/" - " joiners,
  // coefficients "p/q", variables descending within a monomial, e.g.
  //   x1^2*x2 - 1/2*q^3.
  // `compact` drops the spaces around joiners (file-entry form).
  std::string to_string(bool compact = false) const;

  // Parser for both text forms; also accepts redundant whitespace.
  static Poly parse(const std::string& text);

  void add_term(const Monomial& m, const BigRational& c); // drops zeros

private:
  TermMap m_terms;
};

Poly operator*(const BigRational& c, const Poly& p);

// Named forms of the operator surface, matching the module contract.
Poly poly_add(const Poly& a, const Poly& b);

// Exact division: leading-term reduction in graded-lex order. Throws
// NotDivisible when the remainder cannot be cancelled.
Poly poly_exact_div(const Poly& p, const Poly& divisor);

} // namespace pflab
