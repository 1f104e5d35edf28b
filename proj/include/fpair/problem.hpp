#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpair/arith.hpp"
#include "fpair/polynomial.hpp"

namespace fpair {

/// One problem document. Statements are `key=value`, separated by newlines or ';'; '#'
/// starts a comment. Generator lists are bracketed: I=[x*y]. See docs/report-format.md.
struct Problem {
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  std::vector<Polynomial> defining;  // I
  std::vector<Polynomial> a;
  ExactRational t{1};
  std::string cmd;
  /// Rational points of maximal ideals; several points select the global mode of fpt.
  std::vector<std::vector<std::uint64_t>> points;
  std::optional<Polynomial> test_element;
  std::optional<Polynomial> d;
  std::optional<std::vector<Polynomial>> j;
  std::optional<Polynomial> z;
  std::vector<std::vector<Polynomial>> candidates;
  std::optional<std::uint64_t> e_max;
  std::optional<std::uint64_t> degree_bound;
  std::optional<std::uint64_t> e_min;
  std::optional<std::uint64_t> e_cap;
  bool local = false;

  bool operator==(const Problem&) const = default;
};

/// The commands accepted by `cmd`.
const std::vector<std::string>& problem_commands();

/// Parses a problem document. `first_line` numbers the first line of `source` in errors.
/// Syntax errors raise ParseError with line and column; a non-prime p, t <= 0 or an unknown
/// command raise ContractError naming the line.
Problem parse_problem(std::string_view source, std::size_t first_line = 1);

/// Canonical text: one statement per line in a fixed key order, optional keys only when set.
std::string print_problem(const Problem& problem);

/// A corpus: one problem per non-blank, non-comment line, statements separated by ';'.
std::vector<Problem> parse_corpus(std::string_view source);

/// Parses a point "c1,c2,..." with entries reduced mod p.
std::vector<std::uint64_t> parse_point(std::string_view text, std::uint64_t p, std::size_t nvars,
                                       std::size_t line = 1, std::size_t column = 1);

}  // namespace fpair
