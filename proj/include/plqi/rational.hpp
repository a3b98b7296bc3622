#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace plqi {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always in canonical reduced form: gcd(|num|, den) = 1
// and den > 0. All arithmetic and comparisons are exact; equality is equality
// of canonical forms.
using Rational = boost::multiprecision::cpp_rational;

// Parses the wire format `-?[0-9]+(/[1-9][0-9]*)?`. Throws
// std::invalid_argument on anything else (whitespace, floats, signed or zero
// denominators).
Rational parse_rational(std::string_view text);

// Canonical wire form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

Rational rational_abs(const Rational& value);

// Largest integer <= value.
BigInt rational_floor(const Rational& value);

// Smallest integer >= value.
BigInt rational_ceil(const Rational& value);

}  // namespace plqi
