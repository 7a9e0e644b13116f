#ifndef MAGN_ERRORS_HPP
#define MAGN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tree, element or tensor literal. position() is the 0-based
// offset into the input where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands with different arity bounds, or a tree/generator outside the bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Violated precondition (index out of range, wrong arity, nonzero constant term, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured resource budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace magn

#endif  // MAGN_ERRORS_HPP
