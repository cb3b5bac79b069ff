#pragma once

#include <stdexcept>
#include <string>

namespace planeflow {

// Rejection categories. Anything not covered here that goes wrong is a bug
// and surfaces as an assertion, not an Error.
enum class ErrorCode {
    SelfLoop,
    DuplicateDirectedEdge,
    RotationMismatch,
    EmbeddingNotPlanar,
    Disconnected,
    NoPath,
    ForbiddenConfig,
    DegreeTooSmall,
    NotCubic,
    NotPlane,
    InvalidTree,
    InfeasibleComponent,
    Infeasible,
    DeltaTooLarge,
    ParseError,
    InvalidParams,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void reject(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace planeflow
