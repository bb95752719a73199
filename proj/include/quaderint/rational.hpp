#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "quaderint/errors.hpp"

namespace quaderint {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

// Exact value of the double (every finite double is a dyadic rational).
// Throws ContractError on NaN or infinity.
Rational rational_from_double(double x);

Integer floor_rat(const Rational& r);
Integer ceil_rat(const Rational& r);

// 2^e for any integer e.
Rational pow2(long e);

Rational rat_pow(const Rational& base, unsigned e);
Rational rat_abs(const Rational& r);

// "p" or "p/q"; q > 0 after normalization. Whitespace around tokens allowed.
std::optional<Rational> parse_rational(std::string_view s);
Rational parse_rational_or_throw(std::string_view s);

// "p" if the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

}  // namespace quaderint
