#pragma once

#include <stdexcept>

namespace freepairs {

// Base class for all toolkit errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input.
struct parse_error : error {
    using error::error;
};

// Violated operation precondition: arity mismatch, representation caps,
// overflow, invalid arguments.
struct validation_error : error {
    using error::error;
};

// Violated mathematical assumption (non-core input, failed cross-checks).
// Maps to CLI exit code 3.
struct assumption_error : error {
    using error::error;
};

}  // namespace freepairs
