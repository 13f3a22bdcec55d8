#pragma once

#include <stdexcept>
#include <string>

namespace pentagram {

// Degenerate geometric configuration: coincident points/lines, undefined
// cross ratios, pentagram diagonals failing genericity. Messages name the
// failing condition and index.
struct geometry_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact-algebra failure: inexact polynomial division, vanishing denominator,
// zero raised to a negative power.
struct algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid input: wrong index parity, bad rank, matrix that is
// not an ASM, polygon that is not axis-aligned or not closed where required.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Random generation exhausted its retry budget.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pentagram
