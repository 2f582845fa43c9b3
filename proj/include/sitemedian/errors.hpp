#pragma once

#include <stdexcept>
#include <string>

namespace sitemedian {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad CSV, missing sigma, dimension
/// mismatch, violated data assumptions).
struct DataError : Error {
    using Error::Error;
};

/// Structurally valid input for which the requested computation is not
/// defined (k out of range, Lipschitz constant at or below the threshold).
struct InfeasibleError : Error {
    using Error::Error;
};

/// InfeasibleError that carries the violated threshold C(S).
struct ThresholdError : InfeasibleError {
    ThresholdError(const std::string& msg, double threshold_value)
        : InfeasibleError(msg), threshold(threshold_value) {}
    double threshold;
};

/// An enumeration would exceed the configured subset cap.
struct CapExceededError : Error {
    using Error::Error;
};

} // namespace sitemedian
