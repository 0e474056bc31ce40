#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars used throughout the sequence grammar.
 */

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subideal {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses `a`, `a/b`, `-a/b` or a decimal such as `0.125` / `1e-3` exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: `a` for integers, `a/b` otherwise (always reduced).
std::string render_rational(const Rational& r);

/// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

/// Natural log of a positive rational, accurate to long double precision
/// even when numerator or denominator exceed the double range.
long double log_rational(const Rational& r);

long double to_long_double(const Rational& r);

} // namespace subideal
