#include "pflab/ratfun.hpp"

#include "pflab/errors.hpp"

namespace pflab {

RationalFunction::RationalFunction(Poly num, Poly den)
    : m_num(std::move(num)), m_den(std::move(den)) {
  if (m_den.is_zero()) throw NotAUnit("rational function with zero denominator");
  if (m_num.is_zero()) m_den = Poly::one();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out;
  out.m_num = -m_num;
  out.m_den = m_den;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (m_den == o.m_den) return RationalFunction(m_num + o.m_num, m_den);
  return RationalFunction(m_num * o.m_den + o.m_num * m_den, m_den * o.m_den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  return RationalFunction(m_num * o.m_num, m_den * o.m_den);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw NotAUnit("division by zero rational function");
  if (is_zero()) return RationalFunction();
  return RationalFunction(m_num * o.m_den, m_den * o.m_num);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return m_num * o.m_den == o.m_num * m_den;
}

std::string RationalFunction::to_string() const {
  if (m_den == Poly::one()) return m_num.to_string();
  return "(" + m_num.to_string() + ") / (" + m_den.to_string() + ")";
}

} // namespace pflab
