// Error taxonomy for the whole library.  Every failure that callers are
// expected to handle is a named exception type; plain std::invalid_argument
// is reserved for contract violations (malformed inputs, dimension
// mismatches) that indicate caller bugs rather than mathematical verdicts.
#pragma once

#include <stdexcept>
#include <string>

namespace fcy {

// Base class so the CLI can map library failures to exit codes uniformly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when normal words survive at the maximal admitted length, i.e. the
// quotient is (or cannot be certified) finite-dimensional.
struct DimensionBoundExceeded : Error {
    using Error::Error;
};

// A relation contains a term of path length < 2.
struct NonAdmissibleRelation : Error {
    using Error::Error;
};

// A potential cycle misses the cut or meets it more than once.
struct CutNotConsistent : Error {
    using Error::Error;
};

// The bilinear form built from the chosen socle functionals is singular.
struct InternalNondegeneracyFailure : Error {
    using Error::Error;
};

// A computed map failed one of its own defining checks (multiplicativity,
// homogeneity, ...).  Always indicates a bug or an out-of-contract input.
struct VerificationFailure : Error {
    using Error::Error;
};

// A mathematically guaranteed invariant failed (e.g. a constant-adjuster
// statement); hard failure.
struct InvariantViolation : Error {
    using Error::Error;
};

// A socle generator is not homogeneous for the ambient grading.
struct NonHomogeneousSocle : Error {
    using Error::Error;
};

// The algebra is not selfinjective, so no Frobenius functional exists; the
// message carries the socle diagnosis.
struct NotFrobenius : Error {
    using Error::Error;
};

// No k <= k_max realizes the required power identity.
struct NoOrderFound : Error {
    using Error::Error;
};

// Order search requires a connected algebra.
struct NotConnected : Error {
    using Error::Error;
};

// An orbit-category window cannot represent a needed degree.
struct WindowTooSmall : Error {
    WindowTooSmall(const std::string& msg, long long degree)
        : Error(msg), offending_degree(degree) {}
    long long offending_degree;
};

// Input file / builtin-name parse problems; the CLI maps these to exit 1.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace fcy
