#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace kannan {

// Exact arbitrary-precision arithmetic. Every distance, contraction constant
// and convergence bound in this library is a Rational; no analysis path ever
// rounds through floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" where p is an optionally negative decimal integer and
// q a positive decimal integer. Anything else (including "1/0", "1/-2",
// whitespace, empty input) yields nullopt. The result is in lowest terms.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" in
// lowest terms with q > 0. parse_rational(format_rational(r)) == r.
std::string format_rational(const Rational& value);

// value^exponent via integer exponentiation of numerator and denominator.
Rational rational_pow(const Rational& value, unsigned exponent);

}  // namespace kannan
