#pragma once

#include <string>
#include <string_view>

#include "holo/poly.hpp"

namespace holo {

/// Parses and expands a polynomial in one variable.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/' | <juxtaposition>) unary)*
///     unary   := ('+' | '-') unary | power
///     power   := primary ('^' digits)?
///     primary := digits | identifier | '(' expr ')'
///
/// Division is only allowed by a nonzero constant, so "2/3*n" and "(n+1)/2"
/// parse but "1/n" does not. Juxtaposition ("2n", "(n+1)(n-1)") multiplies.
/// Throws ParseError with the offending offset.
UniPoly parse_poly(std::string_view text, std::string_view var = "n");

}  // namespace holo
