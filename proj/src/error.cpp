#include "moorelab/error.hpp"

namespace moorelab {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::NotAPrimePower: return "NotAPrimePower";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MixedFields: return "MixedFields";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::MissingEdge: return "MissingEdge";
        case ErrorCode::SideViolation: return "SideViolation";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::QTooSmall: return "QTooSmall";
        case ErrorCode::InvalidA: return "InvalidA";
        case ErrorCode::MatchingConflict: return "MatchingConflict";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::OddGirth: return "OddGirth";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::OrderMismatch: return "OrderMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace moorelab
