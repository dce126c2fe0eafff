#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erlab {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration or evaluation cap would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A required configuration value is missing or malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed family-file input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace erlab
