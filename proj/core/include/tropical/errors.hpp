#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index or index set does not fit inside the matrix it addresses.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Malformed matrix or polynomial text. `position` is a 0-based character
// offset for polynomial input and a 1-based line number for matrix input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A documented precondition of an operation does not hold (non-square input,
// asymmetric matrix where symmetry is required, invalid rank parameter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input to a construction that needs a tropically nonsingular matrix was
// singular.
class SingularInput : public Error {
 public:
  using Error::Error;
};

// Enumeration of minimizing bijections hit its cap where a complete list was
// required.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tropical
