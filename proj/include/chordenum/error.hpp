#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordenum {

enum class ErrorCode {
    SumMismatch,
    NonPositivePart,
    CardinalityOverflow,
    EmptyChord,
    InvalidTemperament,
    CardinalityOutOfRange,
    CardinalityTooSmall,
    InternalInconsistency,
    ProblemTooLarge,
    InvalidSelector,
    DimensionMismatch,
    ZeroDirection,
    DegenerateAtOrthocentre,
    ShellOutOfRange,
    Overflow,
    UnknownTable,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type. The
/// code identifies the violated precondition; what() carries the details.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::CardinalityOverflow: return "CardinalityOverflow";
    case ErrorCode::EmptyChord: return "EmptyChord";
    case ErrorCode::InvalidTemperament: return "InvalidTemperament";
    case ErrorCode::CardinalityOutOfRange: return "CardinalityOutOfRange";
    case ErrorCode::CardinalityTooSmall: return "CardinalityTooSmall";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ProblemTooLarge: return "ProblemTooLarge";
    case ErrorCode::InvalidSelector: return "InvalidSelector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DegenerateAtOrthocentre: return "DegenerateAtOrthocentre";
    case ErrorCode::ShellOutOfRange: return "ShellOutOfRange";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownTable: return "UnknownTable";
    }
    return "Unknown";
}

} // namespace chordenum
