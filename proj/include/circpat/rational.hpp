#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace circpat {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced
// with a positive denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rational& r);

// Accepts "p" and "p/q" with optional sign; throws ParseError otherwise.
Rational rat_from_string(const std::string& s);

double rat_to_double(const Rational& r);

BigInt factorial(int n);

}  // namespace circpat
