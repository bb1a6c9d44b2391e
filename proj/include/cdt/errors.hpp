#pragma once

#include <stdexcept>
#include <string>

namespace cdt {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files / flags.
struct parse_error : error {
    using error::error;
};

// Structurally invalid data (failed precondition or invariant).
struct validation_error : error {
    using error::error;
};

// Rotation system does not describe a sphere embedding.
struct euler_violation : validation_error {
    using validation_error::validation_error;
};

// outer_anchor is not a directed edge of the graph.
struct dangling_anchor : validation_error {
    using validation_error::validation_error;
};

// Nice tree decomposition does not match the quotient graph it is used on.
struct decomposition_mismatch : validation_error {
    using validation_error::validation_error;
};

struct instance_too_large : error {
    using error::error;
};

struct pair_limit_exceeded : error {
    using error::error;
};

struct disconnection_after_retries : error {
    using error::error;
};

struct no_feasible_entry : error {
    using error::error;
};

} // namespace cdt
