#pragma once

#include <stdexcept>
#include <string>

namespace covsum {

/// Base class for every error raised by the library. `code()` is a short
/// machine-readable identifier such as "coeff-zero" or "enumeration-cap".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// An instance fails a hypothesis of the statement being checked.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Input would require an enumeration beyond the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input or a precondition that is not a mathematical hypothesis.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace covsum
