#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fbent {

enum class ErrorCode {
    MalformedDocument,
    UnknownElement,
    EmptyFocalSet,
    MassOutOfRange,
    NotNormalized,
    FrameTooLarge,
    FrameMismatch,
    EmptySetQuery,
    NotSingleton,
    NotThreeElementFrame,
    ParamOutOfRange,
    TotalConflict,
    JointFrameTooLarge,
    TooManyFocalElements,
    UnknownMeasure,
    UnsupportedDecomposition,
    UnknownExperiment,
    InvalidParam,
    IoFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::EmptyFocalSet: return "EmptyFocalSet";
        case ErrorCode::MassOutOfRange: return "MassOutOfRange";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::FrameTooLarge: return "FrameTooLarge";
        case ErrorCode::FrameMismatch: return "FrameMismatch";
        case ErrorCode::EmptySetQuery: return "EmptySetQuery";
        case ErrorCode::NotSingleton: return "NotSingleton";
        case ErrorCode::NotThreeElementFrame: return "NotThreeElementFrame";
        case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorCode::TotalConflict: return "TotalConflict";
        case ErrorCode::JointFrameTooLarge: return "JointFrameTooLarge";
        case ErrorCode::TooManyFocalElements: return "TooManyFocalElements";
        case ErrorCode::UnknownMeasure: return "UnknownMeasure";
        case ErrorCode::UnsupportedDecomposition: return "UnsupportedDecomposition";
        case ErrorCode::UnknownExperiment: return "UnknownExperiment";
        case ErrorCode::InvalidParam: return "InvalidParam";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

// Every failure in the library surfaces as this exception; callers switch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace fbent
