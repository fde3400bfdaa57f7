#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaql/action.hpp"
#include "gaql/derivation.hpp"
#include "gaql/polynomial.hpp"

namespace gaql {

/// Named polynomials an expression may refer to alongside ring variables.
using PolyTable = std::map<std::string, Polynomial, std::less<>>;

/// Parses
///
///   expr     := ['+' | '-'] term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nat)?
///   base     := rational | identifier | '(' expr ')'
///   rational := nat ('/' nat)?
///
/// Identifiers are ring variables or entries of `named`. There is no
/// implicit multiplication: "xy" is a single identifier. Throws ParseError
/// with a 1-based line and column.
Polynomial parse_polynomial(std::string_view src, const RingPtr& ring,
                            const PolyTable* named = nullptr);

/// Terms in descending grevlex, "a/b" coefficients, explicit '*' and '^'.
std::string format_polynomial(const Polynomial& p);

/// Terms grouped by increasing power of variable `var`, which is printed
/// first in each term: "u + t*y" rather than "t*y + u".
std::string format_in_powers_of(const Polynomial& p, std::size_t var);

/// Action components as series in the group parameter.
std::vector<std::string> format_action(const GaAction& a);

std::string format_tuple(const std::vector<std::string>& items);
std::string format_derivation(const Derivation& d);

}  // namespace gaql
