#pragma once
// Exact rational numbers and their text forms.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace softev {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses `a`, `a/b` or a decimal literal `a.bcd` into an exact rational.
/// Decimals are converted exactly (0.8 -> 4/5). Throws ProbError(InvalidValue)
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms fraction text: "117/2000", "1", "0".
std::string to_fraction(const Rational& value);

/// Fixed-point text with exactly `digits` digits after the point, rounded
/// half away from zero.
std::string to_decimal(const Rational& value, int digits);

/// Rounds to `digits` decimal places (half away from zero), exactly.
Rational round_to(const Rational& value, int digits);

inline bool in_unit_interval(const Rational& value) {
    return value >= 0 && value <= 1;
}

}  // namespace softev
