#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dronecover {

/// Raised when an id that must be fresh is already present.
class DuplicateKeyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an id that must exist is absent.
class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Brute-force solvers refuse inputs above their size limits.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text input that does not match the expected line grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dronecover
