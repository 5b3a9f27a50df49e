#pragma once

#include <stdexcept>
#include <string>

namespace sizzle {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A formula denominator landed within the guard radius of zero
// (drive on a transition, degenerate eigenvalues, ...).
struct pole_error : error {
    using error::error;
};

// No solution within the imposed caps/constraints (pulse optimization,
// CZ duration search, drive-frequency selection).
struct infeasible_error : error {
    using error::error;
};

// A lookup landed outside a table's grid coverage.
struct out_of_table_error : error {
    using error::error;
};

// Bad run configuration or malformed input file.
struct config_error : error {
    using error::error;
};

} // namespace sizzle
