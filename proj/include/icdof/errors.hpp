#pragma once

#include <stdexcept>

namespace icdof {

// Invalid configuration or argument. The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure (non-finite input, factorization breakdown,
// non-convergence). The CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace icdof
