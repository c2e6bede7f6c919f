#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace covering {

// All algorithm arithmetic is exact. BigInt/Rational are arbitrary precision;
// Rational is always kept in canonical form (reduced, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" or a finite decimal such as "-12.25".
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

BigInt rational_floor(const Rational& value);
BigInt rational_ceil(const Rational& value);

// base^exp with integer exp (negative allowed); base must be nonzero.
Rational rational_pow(const Rational& base, long exp);

// Smallest integer e with base^e >= value; requires base > 1 and value > 0.
long least_power_at_least(const Rational& base, const Rational& value);

// Deterministic approximation of sqrt(value) from below,
// relative error at most 2^-20. Requires value >= 0.
Rational approx_sqrt(const Rational& value);

}  // namespace covering
