#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uag {

// Base of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation table with wrong dimensions or an out-of-range entry.
class MalformedAlgebraError : public Error {
 public:
  using Error::Error;
};

class SignatureMismatchError : public Error {
 public:
  using Error::Error;
};

// The operation is undefined for this algebra (no neutral, wrong kind, ...).
class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Equation system referring to undeclared or duplicate variables.
class InvalidSystemError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace uag
