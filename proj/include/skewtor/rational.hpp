#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace skewtor {

// Exact rational arithmetic; no floating point is used anywhere in the engine.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical form "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Rational& r);

// Parses "p", "-p", "p/q" (optional leading '+'/'-'); throws InputError on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace skewtor
