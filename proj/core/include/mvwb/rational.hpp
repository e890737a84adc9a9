#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mvwb {

// Exact arbitrary-precision rationals, always in lowest terms with positive
// denominator. Equality is structural.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

// Accepts "p", "-p", "p/q" with optional sign on p.
Rational parse_rational(const std::string& s);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string rational_str(const Rational& r);

bool is_integer(const Rational& r);

// Throws SizeMismatch if r is not an integer fitting in long.
long rational_to_long(const Rational& r);

}  // namespace mvwb
