#pragma once

#include <stdexcept>
#include <string>

namespace moorelab {

enum class ErrorCode {
    NotAPrimePower,
    DivisionByZero,
    MixedFields,
    VertexOutOfRange,
    DuplicateEdge,
    DuplicateLabel,
    SelfLoop,
    MissingEdge,
    SideViolation,
    Disconnected,
    MalformedGraph6,
    QTooSmall,
    InvalidA,
    MatchingConflict,
    DegreeTooSmall,
    OddGirth,
    PreconditionViolated,
    OrderMismatch,
    TooLarge,
    Unsupported,
    Overflow,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace moorelab
