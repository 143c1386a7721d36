#pragma once

#include <stdexcept>
#include <string>

namespace gdh {

/// Parameters fall outside the admissible regime. `inequality()` names the
/// condition that failed, e.g. "Z^2/4 >= -w".
class RegimeViolation : public std::runtime_error {
public:
    explicit RegimeViolation(std::string inequality, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? inequality : inequality + " (" + detail + ")"),
          inequality_(std::move(inequality)) {}

    const std::string& inequality() const noexcept { return inequality_; }

private:
    std::string inequality_;
};

/// Base class for numerical failures (CLI maps these to exit code 2).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// LDL^T pivot underflow that persisted through shift-perturbation retries.
class PivotBreakdown : public NumericError {
public:
    using NumericError::NumericError;
};

/// A bracketing or iterative solve failed to converge.
class NoConvergence : public NumericError {
public:
    using NumericError::NumericError;
};

/// Inverse iteration was asked for an eigenvector at a shift that is not
/// isolated (two eigenvalues inside the isolation window).
class NoIsolation : public NumericError {
public:
    using NumericError::NumericError;
};

/// A growth-rate fit found fewer than the required records in its window.
class WindowTooShort : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace gdh
