#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddcol {

/// The input does not satisfy the hypotheses of the requested operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coloring does not assign exactly one color to every edge of its graph.
class PartialColoringError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed edge-list or coloring text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened or read.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or sampler ran past its configured node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm reached a state that its correctness argument excludes.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oddcol
