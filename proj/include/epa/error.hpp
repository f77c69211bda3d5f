#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epa {

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested graph class, pattern, or (problem, parameter) pair is not implemented.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact oracle was asked to solve an instance above its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `line()` is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace epa
