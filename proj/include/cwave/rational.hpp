#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwave/common.hpp"

namespace cwave {

/// Exact rational arithmetic. The admissible/critical distinction for the
/// growth exponent is an exact inequality and must not wash out in floating
/// point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "p", or "-p/q"; throws ConfigError on malformed input.
Rational parse_rational(const std::string& s);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

/// ceil(r) for exact rationals.
BigInt ceil_rational(const Rational& r);
/// floor(r) for exact rationals.
BigInt floor_rational(const Rational& r);

}  // namespace cwave
