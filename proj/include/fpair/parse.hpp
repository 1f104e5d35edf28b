#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpair/polynomial.hpp"

namespace fpair {

/// Parses the polynomial text grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer | variable ['^' integer] | '(' expr ')' ['^' integer]
/// Integer coefficients are reduced mod p. An identifier that is not a variable name is
/// split greedily into variable names, so "xy" reads as x*y when x and y are variables.
/// Columns in ParseError are 1-based offsets into `text` shifted by `column_offset`;
/// `line` is passed through.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names, std::uint64_t p,
                            std::size_t line = 1, std::size_t column_offset = 0);

/// Parses "[f1, f2, ...]" (brackets required) into polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, std::span<const std::string> names,
                                              std::uint64_t p, std::size_t line = 1,
                                              std::size_t column_offset = 0);

}  // namespace fpair
