#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monopos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. offset is the 0-based byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on the arguments does not hold (vertex out of range,
/// disconnected graph where a connected one is required, family parameters
/// outside their domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The instance is larger than the configured cap of the requested routine.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A node or expansion budget ran out before the search finished.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A self-check on a computed certificate failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace monopos
