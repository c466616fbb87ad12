#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pflab {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the representation contract
// we expose; the wrappers below own the text form.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRational& r) { return boost::multiprecision::denominator(r); }

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const BigRational& r);

// Accepts "p" and "p/q" with an optional leading sign.
BigRational rat_parse(const std::string& text);

} // namespace pflab
