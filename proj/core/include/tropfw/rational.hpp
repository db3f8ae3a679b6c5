#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace tropfw {

/// Exact rational scalar used across the library. Canonical form (reduced,
/// positive denominator) is maintained by the backend; equality is exact.
/// No floating point enters any solver or geometry path.
using Rational = boost::multiprecision::mpq_rational;

/// Parses an exact rational from text. Accepted forms:
///   integers      "42", "-7"
///   fractions     "355/113", "-2/6" (reduced on construction)
///   decimals      "3.25", "-0.0001", ".5", "1e-3", "2.5E2"
/// Surrounding whitespace is ignored. Throws ParseError otherwise
/// (including zero denominators).
Rational parse_rational(std::string_view text);

/// Converts a finite double to the exact rational it denotes (doubles are
/// dyadic rationals, so this is lossless), then rounds to `digits` decimal
/// places with ties to even. Throws std::invalid_argument for non-finite
/// values or negative digit counts.
Rational round_to_decimal(double value, int digits);

/// "p/q" when the denominator is not 1, plain integer text otherwise.
std::string to_fraction_string(const Rational& q);

/// Nearest-double approximation, for display and statistics only.
double to_double(const Rational& q);

}
