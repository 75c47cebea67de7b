#pragma once

#include <stdexcept>
#include <string>

namespace kproper {

/// Base for every error raised by the library. Criterion failures are never
/// errors; they are reported as data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on mathematical input was violated (non-ample class,
/// zero vector, singular data, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested operation exists but not for this dimension/backend.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed or non-canonical textual input. `location` is a JSON pointer,
/// byte offset, or flag name identifying where the problem was found.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location = {})
      : Error(location.empty() ? message : location + ": " + message),
        message_(message),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }
  // The message without the location prefix, for re-throwing at a new location.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::string location_;
};

}  // namespace kproper
