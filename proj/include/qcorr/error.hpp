#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcorr {

enum class ErrorCode {
    NotHermitian,
    TraceNotOne,
    NotPositive,
    NotXState,
    NegativeStrength,
    StepTooLarge,
    NoBracket,
    InvalidConfig,
    IoFailure,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `magnitude` carries the
// size of the violation where one exists (e.g. the most negative eigenvalue).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, double magnitude = 0.0)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), magnitude_(magnitude) {}

    ErrorCode code() const noexcept { return code_; }
    double magnitude() const noexcept { return magnitude_; }

private:
    ErrorCode code_;
    double magnitude_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotXState: return "NotXState";
    case ErrorCode::NegativeStrength: return "NegativeStrength";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

} // namespace qcorr
