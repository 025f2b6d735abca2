#pragma once

#include <stdexcept>
#include <string>

namespace weblab {

// Machine-readable failure codes. Every error the pipeline can raise maps to
// one of these; the CLI turns them into exit codes and report entries.
enum class ErrorCode {
    NotAUnit,
    PrecisionExhausted,
    NotCoprime,
    SlopeCollision,
    SingularAtOrigin,
    NoExplicitSlopes,
    BadChart,
    DegenerateProlongation,
    AdaptedBasisViolation,
    MalformedInput,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::SlopeCollision: return "SlopeCollision";
        case ErrorCode::SingularAtOrigin: return "SingularAtOrigin";
        case ErrorCode::NoExplicitSlopes: return "NoExplicitSlopes";
        case ErrorCode::BadChart: return "BadChart";
        case ErrorCode::DegenerateProlongation: return "DegenerateProlongation";
        case ErrorCode::AdaptedBasisViolation: return "AdaptedBasisViolation";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace weblab
