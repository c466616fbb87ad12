#include "pflab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pflab/errors.hpp"

namespace pflab {

std::string rat_to_string(const BigRational& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

BigRational rat_parse(const std::string& text) {
  try {
    return BigRational(text);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + text);
  }
}

Poly Poly::constant(const BigRational& c) {
  Poly p;
  if (c != 0) p.m_terms.emplace(Monomial::one(), c);
  return p;
}

Poly Poly::term(const BigRational& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.m_terms.emplace(m, c);
  return p;
}

Poly Poly::variable(VarId v, long e) {
  return term(1, Monomial::var(v, e));
}

bool Poly::is_constant() const {
  return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
}

long Poly::degree() const {
  if (m_terms.empty()) return -1;
  return m_terms.begin()->first.degree();
}

long Poly::degree_in(VarId v) const {
  long d = 0;
  for (const auto& [m, c] : m_terms) d = std::max(d, m.exponent(v));
  return d;
}

const Monomial& Poly::leading_monomial() const {
  if (m_terms.empty()) throw IndexOutOfRange("leading term of zero polynomial");
  return m_terms.begin()->first;
}

const BigRational& Poly::leading_coefficient() const {
  if (m_terms.empty()) throw IndexOutOfRange("leading term of zero polynomial");
  return m_terms.begin()->second;
}

BigRational Poly::coefficient(const Monomial& m) const {
  auto it = m_terms.find(m);
  return it == m_terms.end() ? BigRational(0) : it->second;
}

Poly Poly::coefficient_of(VarId v, long e) const {
  Poly out;
  for (const auto& [m, c] : m_terms)
    if (m.exponent(v) == e) out.add_term(m.without(v), c);
  return out;
}

BigRational Poly::constant_term() const {
  return coefficient(Monomial::one());
}

void Poly::add_term(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [it, fresh] = m_terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m_terms.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : m_terms) out.m_terms.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.m_terms) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.m_terms) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : m_terms)
    for (const auto& [m2, c2] : o.m_terms) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Poly Poly::operator*(const BigRational& c) const {
  if (c == 0) return Poly();
  Poly out;
  for (const auto& [m, k] : m_terms) out.m_terms.emplace(m, k * c);
  return out;
}

Poly operator*(const BigRational& c, const Poly& p) { return p * c; }

Poly Poly::pow(unsigned long e) const {
  Poly result = Poly::one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(VarId v, const Poly& value) const {
  Poly out;
  for (const auto& [m, c] : m_terms) {
    long e = m.exponent(v);
    Poly piece = Poly::term(c, m.without(v));
    if (e > 0) piece *= value.pow(static_cast<unsigned long>(e));
    out += piece;
  }
  return out;
}

bool Poly::uses_only(const std::vector<VarId>& allowed) const {
  for (const auto& [m, c] : m_terms)
    for (const auto& [v, e] : m.exponents()) {
      bool found = false;
      for (VarId w : allowed)
        if (w == v) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (const auto& [m, c] : m_terms)
    for (const auto& [v, e] : m.exponents())
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void append_monomial(std::ostream& os, const Monomial& m) {
  // Variables print in ascending registry order: q^3*x1^2, x1^2*x2.
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    if (!first) os << "*";
    os << vars::name(v);
    if (e != 1) os << "^" << e;
    first = false;
  }
}

} // namespace

std::string Poly::to_string(bool compact) const {
  if (m_terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : m_terms) {
    BigRational mag = c < 0 ? BigRational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (compact ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + "));
    }
    if (m.is_one()) {
      os << rat_to_string(mag);
    } else {
      if (mag != 1) os << rat_to_string(mag) << "*";
      append_monomial(os, m);
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= s.size();
  }

  char peek() {
    skip_space();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer at offset " + std::to_string(start) + " in: " + s);
    return s.substr(start, pos - start);
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (pos == start || std::isdigit(static_cast<unsigned char>(s[start])))
      throw ParseError("expected identifier at offset " + std::to_string(start) + " in: " + s);
    return s.substr(start, pos - start);
  }
};

// factor := integer ['/' integer] | identifier ['^' integer]
// term   := factor ('*' factor)*
// poly   := ['-'] term (('+'|'-') term)*
void parse_factor(Lexer& lx, BigRational& coeff, Monomial& mono) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num = lx.integer();
    if (lx.eat('/')) {
      std::string den = lx.integer();
      coeff *= rat_parse(num + "/" + den);
    } else {
      coeff *= rat_parse(num);
    }
  } else {
    std::string name = lx.identifier();
    long e = 1;
    if (lx.eat('^')) e = std::stol(lx.integer());
    mono = mono * Monomial::var(vars::id(name), e);
  }
}

} // namespace

Poly Poly::parse(const std::string& text) {
  Lexer lx(text);
  Poly out;
  bool negative = lx.eat('-');
  if (!negative) lx.eat('+');
  while (true) {
    BigRational coeff = negative ? -1 : 1;
    Monomial mono;
    parse_factor(lx, coeff, mono);
    while (lx.eat('*')) parse_factor(lx, coeff, mono);
    out.add_term(mono, coeff);
    if (lx.done()) break;
    if (lx.eat('+')) {
      negative = false;
    } else if (lx.eat('-')) {
      negative = true;
    } else {
      throw ParseError("unexpected character '" + std::string(1, lx.peek()) + "' in: " + text);
    }
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_exact_div(const Poly& p, const Poly& divisor) {
  if (divisor.is_zero()) throw NotDivisible("division by zero polynomial");
  Poly rem = p;
  Poly quot;
  const Monomial& dlm = divisor.leading_monomial();
  const BigRational& dlc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rlm = rem.leading_monomial();
    if (!dlm.divides(rlm))
      throw NotDivisible("leading monomial not divisible; remainder " + rem.to_string());
    Monomial qm = dlm.divide_into(rlm);
    BigRational qc = rem.leading_coefficient() / dlc;
    Poly t = Poly::term(qc, qm);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

} // namespace pflab
