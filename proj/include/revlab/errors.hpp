#pragma once

#include <stdexcept>

namespace revlab {

// Malformed or out-of-contract input.  The CLI maps these to exit code 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical guard tripped: resolution exhausted, integer overflow on
// export, singular point hit, cost cap exceeded.  CLI exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace revlab
