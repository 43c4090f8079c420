#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varjet {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Syntax error while reading expression text; carries the byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Interior value used where a boundary one is required, or vice versa,
/// or two operands built over different (n, m) contexts.
class WorldError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range coordinate/component index, wrong multi-index width,
/// or a multi-index entry driven negative.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero polynomial.
class DivideByZeroError : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation failure: unassigned atom, pole, or a function
/// argument outside its domain.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace varjet
