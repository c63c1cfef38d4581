#pragma once

#include <stdexcept>
#include <string>

namespace pfolia {

// Mixed-field operands (different (p, e) descriptors).
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied on the wrong affine chart.
struct ChartError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Zero or otherwise degenerate input where a nonzero object is required.
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Generator set does not have the required rank.
struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal self-check failed; indicates a bug, not bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Data-driven constraint violated (inadmissible case/characteristic pair,
// arity mismatch, malformed table data).
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace pfolia
