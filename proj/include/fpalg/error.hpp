#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates an operation's precondition
/// (context mismatch, division by zero, non-idempotent element, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A computation needed more degree than the truncated rewriting system covers.
class UnverifiedError : public Error {
public:
  using Error::Error;
};

} // namespace fpalg
