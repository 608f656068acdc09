#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace polytopal {

// Input text could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::string msg, int line = 0)
      : std::runtime_error(std::move(msg)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A conclusion that must hold for valid inputs failed to hold.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polytopal
