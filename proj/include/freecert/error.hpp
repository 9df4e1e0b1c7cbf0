#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freecert {

/// Malformed or out-of-range input (bad letter index, empty element where a
/// nontrivial one is required, violated precondition).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankMismatch : public InputError {
 public:
  RankMismatch(int lhs, int rhs)
      : InputError("rank mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs)) {}
};

/// Text could not be parsed as a word; `position` is the 0-based byte offset.
class ParseError : public InputError {
 public:
  ParseError(std::size_t position, const std::string& what)
      : InputError("at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A bounded search ran out of budget before reaching an answer. Never
/// converted into a yes/no verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The axis scan window was too small to certify that two axes are disjoint.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace freecert
