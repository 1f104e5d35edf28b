#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpair {

// Every error carries a stable code that the CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Operands live in different ambient rings (characteristic or variable count differ).
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what) : Error("E_STRUCTURE", what) {}
};

/// A documented precondition of an operation does not hold.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error("E_CONTRACT", what) {}
};

/// A configured resource bound (Groebner pairs, basis size, enumeration size) was exceeded.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error("E_RESOURCE", what) {}
};

/// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error("E_OVERFLOW", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("E_PARSE", "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fpair
