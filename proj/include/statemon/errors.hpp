#pragma once

#include <stdexcept>
#include <string>

namespace statemon {

// Configuration / input problems (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : ConfigError {
    using ConfigError::ConfigError;
};
struct RowSumError : ValidationError {
    using ValidationError::ValidationError;
};
struct NegativeEntryError : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

// Numeric failures (CLI exit code 2).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : NumericError {
    using NumericError::NumericError;
};
struct SingularSystem : NumericError {
    using NumericError::NumericError;
};
struct HorizonExceeded : NumericError {
    using NumericError::NumericError;
};
struct TooLarge : NumericError {
    using NumericError::NumericError;
};

}  // namespace statemon
