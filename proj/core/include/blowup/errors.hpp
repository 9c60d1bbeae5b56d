#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

// Mixing polynomials over different variable sets.
struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// evalInt called with an unassigned variable.
struct MissingAssignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Geometric expansion of a factor whose q-exponent is <= 0 would not truncate.
struct NonpositiveGrading : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Hodge substitution t^2 -> u applied to a polynomial with an odd t-exponent.
struct OddExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration request that no diagram can satisfy.
struct EmptyRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A combinatorial convention was violated; signals a bug, not a user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace blowup
