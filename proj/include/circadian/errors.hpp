#pragma once

#include <stdexcept>
#include <string>

namespace circadian {

// Base class for all analysis failures so callers can catch one type.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on the parameters is violated (e.g. vs >= vm).
struct ConstraintViolation : AnalysisError {
    using AnalysisError::AnalysisError;
};

// A Michaelis-Menten inversion was requested at or above the saturation
// limit V; `stage` names the cascade stage (P2/P1/P0) when applicable.
struct SaturationExceeded : AnalysisError {
    std::string stage;
    SaturationExceeded(const std::string& msg, std::string stage_ = {})
        : AnalysisError(msg), stage(std::move(stage_)) {}
};

// Bisection bracket for the closed-loop fixed point could not be established.
struct NoBracket : AnalysisError {
    using AnalysisError::AnalysisError;
};

// A state component became NaN or infinite during integration.
struct NonFinite : AnalysisError {
    using AnalysisError::AnalysisError;
};

// Bad arguments at the API or CLI boundary.
struct UsageError : AnalysisError {
    using AnalysisError::AnalysisError;
};

// Not enough peaks in a trajectory to estimate a period.
struct InsufficientData : AnalysisError {
    using AnalysisError::AnalysisError;
};

}  // namespace circadian
