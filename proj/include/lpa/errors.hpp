#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

// Failure categories surfaced by the library. The CLI maps these to process
// exit codes (input problems -> 1, enumeration caps -> 2).
enum class ErrorCode {
  UnknownVertex,
  DuplicateVertex,
  NotHereditarySaturated,
  NotAdmissible,
  InvalidCycle,
  CapExceeded,
  ZeroPolynomial,
  SymbolicField,
  UnsupportedDegree,
  FieldMismatch,
  MalformedCandidate,
  OutOfRange,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::NotHereditarySaturated: return "NotHereditarySaturated";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SymbolicField: return "SymbolicField";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::MalformedCandidate: return "MalformedCandidate";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lpa
