#pragma once

#include <stdexcept>
#include <string>

namespace cnotopt {

enum class ErrorCode {
    DimensionMismatch,
    IndexOutOfRange,
    SingularMatrix,
    ParseError,
    DuplicateEdge,
    SelfLoop,
    UnknownArchitecture,
    DisconnectedGraph,
    SameVertex,
    InvalidDistance,
    InvalidPlacement,
    TooManyQubits,
    InstanceTooLarge,
    InvalidPath,
    InvalidParams,
    VerificationFailed,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::IndexOutOfRange: return "index out of range";
        case ErrorCode::SingularMatrix: return "singular matrix";
        case ErrorCode::ParseError: return "parse error";
        case ErrorCode::DuplicateEdge: return "duplicate edge";
        case ErrorCode::SelfLoop: return "self loop";
        case ErrorCode::UnknownArchitecture: return "unknown architecture";
        case ErrorCode::DisconnectedGraph: return "disconnected graph";
        case ErrorCode::SameVertex: return "same vertex";
        case ErrorCode::InvalidDistance: return "invalid distance";
        case ErrorCode::InvalidPlacement: return "invalid placement";
        case ErrorCode::TooManyQubits: return "too many qubits";
        case ErrorCode::InstanceTooLarge: return "instance too large";
        case ErrorCode::InvalidPath: return "invalid path";
        case ErrorCode::InvalidParams: return "invalid parameters";
        case ErrorCode::VerificationFailed: return "verification failed";
    }
    return "unknown error";
}

/// Exception type carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace cnotopt
