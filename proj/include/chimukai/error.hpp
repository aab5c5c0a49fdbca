#pragma once

#include <stdexcept>
#include <string>

namespace chimukai {

enum class ErrorKind {
  InvalidInput,
  RingMismatch,
  NotHomogeneous,
  MissingBasis,
  Inadmissible,
  OutOfRange,
  NotIdempotent,
  Unsupported,
  Cancelled,
  Internal,
};

const char* to_string(ErrorKind kind);

/// All recoverable failures in the library are reported with this type.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace chimukai
