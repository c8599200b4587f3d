#pragma once

#include <stdexcept>
#include <string>

namespace henv {

/// Error identifiers carried by every henv exception. The CLI prints the
/// enumerator name on stderr and maps it to an exit code.
enum class ErrorCode {
    NegativeSupport,
    InvalidParameter,
    NonMonotonicGrid,
    TooFewSamples,
    DomainError,
    MissingDerivatives,
    NotHorizontallyRegular,
    NotHorizontal,
    CompatibilityViolation,
    DegenerateRadius,
    NotPeriodic,
    GridMismatch,
    PreconditionNotConstantSign,
    DerivativeVanishes,
    ParallelLines,
    NegativeSupportUnresolvable,
    ParseError,
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeSupport: return "NegativeSupport";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::NonMonotonicGrid: return "NonMonotonicGrid";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::MissingDerivatives: return "MissingDerivatives";
        case ErrorCode::NotHorizontallyRegular: return "NotHorizontallyRegular";
        case ErrorCode::NotHorizontal: return "NotHorizontal";
        case ErrorCode::CompatibilityViolation: return "CompatibilityViolation";
        case ErrorCode::DegenerateRadius: return "DegenerateRadius";
        case ErrorCode::NotPeriodic: return "NotPeriodic";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::PreconditionNotConstantSign: return "PreconditionNotConstantSign";
        case ErrorCode::DerivativeVanishes: return "DerivativeVanishes";
        case ErrorCode::ParallelLines: return "ParallelLines";
        case ErrorCode::NegativeSupportUnresolvable: return "NegativeSupportUnresolvable";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return error_name(code_); }

  private:
    ErrorCode code_;
};

}  // namespace henv
