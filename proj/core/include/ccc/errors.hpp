#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccc {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed or semantically invalid input (bad text, non-homogeneous
// generator, unusable prime, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInput(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The random hypersurfaces kept producing a residual of too large a
// dimension. Carries the seed so the run can be reproduced.
class GenericityFailure : public Error {
 public:
  GenericityFailure(const std::string& what, std::uint64_t seed)
      : Error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// An internal consistency check failed (residual round trip, verification
// rerun disagreeing with the first run).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ccc
