#pragma once

#include "pflab/poly.hpp"

namespace pflab {

// Quotient of polynomials with no gcd normalization; the denominator is kept
// nonzero and equality is decided by cross multiplication. Intended for small
// accumulations only (entry-level arithmetic, Pfaffians of size <= 4): sums
// multiply denominators, so large expression trees must be cleared to Poly
// form first.
class RationalFunction {
public:
  RationalFunction() : m_num(Poly::zero()), m_den(Poly::one()) {}
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(const Poly& p) : m_num(p), m_den(Poly::one()) {}
  explicit RationalFunction(const BigRational& c) : m_num(Poly::constant(c)), m_den(Poly::one()) {}

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(Poly::one()); }

  const Poly& num() const { return m_num; }
  const Poly& den() const { return m_den; }
  bool is_zero() const { return m_num.is_zero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const; // throws NotAUnit on zero
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  // Cross-multiplied equality: num*o.den == o.num*den.
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  Poly m_num;
  Poly m_den;
};

} // namespace pflab
