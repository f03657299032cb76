#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace slabcy {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// n! as an exact integer; n must be >= 0.
Int factorial(long n);

// Canonical "num/den" with den always printed and kept positive, e.g. "-3/2", "5/1".
std::string fraction_string(const Rational& r);

// Inverse of fraction_string; accepts "num" or "num/den".
Rational parse_fraction(const std::string& text);

}  // namespace slabcy
