#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

/// Parses an expression over the variables of `ring`.
///
/// Grammar (whitespace ignored):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*        juxtaposed numerals are rejected
///   factor  := ['-'|'+'] factor | atom ['^' digits]
///   atom    := digits ['/' digits] | identifier | '(' expr ')'
///
/// Throws ParseError carrying the byte offset of the problem.
Polynomial parse_expression(std::string_view text, const Ring& ring);

/// Splits "x,y,z" into names; surrounding whitespace is trimmed.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace germ
