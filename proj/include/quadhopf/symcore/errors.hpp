#pragma once

#include <stdexcept>
#include <string>

namespace quadhopf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text, unknown variable, illegal exponent.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in structurally different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated (sizes, domains, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of a non-unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// The generators do not generate the unit ideal (or miss a target).
class NotInIdeal : public Error {
 public:
  using Error::Error;
};

/// The Buchberger step budget was exhausted.
class GroebnerCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A replayed construction diverged from its expected value.
class ReplayMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace quadhopf
