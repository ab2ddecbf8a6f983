#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympow {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Binary operation on polynomials sorted under different term orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exponent exceeded Monomial::kMaxExponent.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// Buchberger produced an element above the configured degree cap.
class DegreeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sympow
