#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gaql {

/// Exact rational coefficient. GMP keeps every value canonical: positive
/// denominator, numerator and denominator coprime, zero stored as 0/1.
using Rational = mpq_class;

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b", "-a/b" with b > 0. Throws Error(MalformedRational).
Rational parse_rational(std::string_view text);

Rational factorial(unsigned k);

}  // namespace gaql
