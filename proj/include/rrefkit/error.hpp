#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rrefkit {

// Base of every error the toolkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based source line, when the error came from multi-line input.
  [[nodiscard]] std::optional<std::size_t> line() const { return line_; }

 private:
  std::optional<std::size_t> line_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidOperation : public Error {
 public:
  using Error::Error;
};

class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

// Raised only when an internal invariant breaks; indicates a bug.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rrefkit
