#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace endo {

/// Exact arbitrary-precision rational. GMP keeps results canonical
/// (gcd 1, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Builds p/q in canonical form. q must be nonzero.
Rational make_rational(long p, long q = 1);

/// Parses "p", "-p" or "p/q" (no whitespace, no decimals).
std::optional<Rational> parse_rational(std::string_view text);

/// Parses a decimal such as "9.9" or "-0.25" exactly.
std::optional<Rational> parse_decimal(std::string_view text);

/// Parses either a fraction or a decimal literal.
std::optional<Rational> parse_number(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with at most `digits` fractional digits, trailing zeros
/// trimmed. Exact when the expansion terminates within `digits`.
std::string to_decimal(const Rational& value, int digits = 12);

Rational dot(const RationalVector& a, const RationalVector& b);

bool is_zero(const RationalVector& v);

/// Scales v to the primitive integer vector on its ray whose first nonzero
/// entry is positive. Zero vectors are returned unchanged.
RationalVector canonical_direction(const RationalVector& v);

/// Scales v by the positive factor that makes it a primitive integer vector
/// (orientation preserved).
RationalVector primitive_integer(const RationalVector& v);

std::string to_string(const RationalVector& v);

}  // namespace endo
