#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zhodge {

/// Malformed or invariant-violating input (bad prime, bad profile, dimension
/// mismatch). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed value that lies outside the domain of an operation, e.g. a
/// ring element that is not in R+ handed to a reconstruction map. The CLI
/// maps this to exit code 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Text that failed to parse. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace zhodge
