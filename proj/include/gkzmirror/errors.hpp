#ifndef GKZMIRROR_ERRORS_HPP
#define GKZMIRROR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No linear form h with h(a_j) = 1 for all j exists.
struct NoUnitForm : error { using error::error; };

// Lattice enumeration exceeded the configured node budget.
struct BudgetExceeded : error { using error::error; };

// Series operands disagree on variable count, grading, or level bound.
struct GradingMismatch : error { using error::error; };

// exp_series requires a vanishing constant term.
struct NonzeroConstantTerm : error { using error::error; };

struct NotPrime : error { using error::error; };

// No common pointed grading is available for a combined series.
struct NotPointed : error { using error::error; };

// A check was requested beyond the level the input series was built to.
struct InsufficientTruncation : error { using error::error; };

struct BadConfigFile : error { using error::error; };

struct BadFlag : error { using error::error; };

} // namespace gkz

#endif // GKZMIRROR_ERRORS_HPP
