#pragma once

#include <stdexcept>
#include <string>

namespace mcf {

enum class ErrorCode {
  invalid_spec,
  parse_error,
  cap_exceeded,
  ring_mismatch,
  not_invertible,
  index_constraint,
  unknown_element,
  key_overflow,
  precondition,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::ring_mismatch: return "ring-mismatch";
    case ErrorCode::not_invertible: return "not-invertible";
    case ErrorCode::index_constraint: return "index-constraint";
    case ErrorCode::unknown_element: return "unknown-element";
    case ErrorCode::key_overflow: return "key-overflow";
    case ErrorCode::precondition: return "precondition";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by closure-style computations that outgrow their member cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial)
      : Error(ErrorCode::cap_exceeded, what + " (partial count " + std::to_string(partial) + ")"),
        partial_(partial) {}

  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace mcf
