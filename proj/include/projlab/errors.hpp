#pragma once

#include <stdexcept>
#include <string>

namespace projlab {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad sizes (zero dimension, incompatible shapes).
struct dimension_error : error {
    using error::error;
};

// Out-of-range or inconsistent user parameters.
struct parameter_error : error {
    using error::error;
};

// Structural precondition violated (non-Hermitian input, wrong measure shape).
struct shape_error : error {
    using error::error;
};

// Numerical failure; carries the offending residual when one is known.
struct numeric_error : error {
    double residual;
    explicit numeric_error(const std::string& msg, double res = 0.0)
        : error(msg), residual(res) {}
};

// Tracial-state extraction found inconsistent eigenvalue counts.
struct extraction_error : error {
    int interior_count;
    int expected_count;
    extraction_error(const std::string& msg, int interior, int expected)
        : error(msg), interior_count(interior), expected_count(expected) {}
};

}  // namespace projlab
