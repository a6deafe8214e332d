#pragma once

#include <stdexcept>

namespace poolstat {

// Input data or arguments violate an operation's preconditions.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative numeric routine failed (non-convergence, flat likelihood, ...).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace poolstat
