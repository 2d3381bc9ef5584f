#pragma once

#include <stdexcept>
#include <string>

namespace scitrade {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(std::string message) : Error(std::move(message)), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a documented invariant
/// (negative counts, empty assignment files, unmapped journals in strict mode, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A name (field, column) that does not exist in the data at hand.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (classification thresholds, synthetic-data specs, CLI flags).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace scitrade
