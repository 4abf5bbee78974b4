/**
 * @file simplex.hpp
 * @brief Exact rational two-phase simplex (Bland's rule, cycle-free,
 *        deterministic). Small dense problems only.
 */
#ifndef GKZMIRROR_SIMPLEX_HPP
#define GKZMIRROR_SIMPLEX_HPP

#include <vector>

#include "gkzmirror/rational.hpp"

namespace gkz {

// min c.x  subject to  A x = b, x >= 0.
struct LpProblem {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<Rat> c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat objective = 0;
    std::vector<Rat> x;
};

LpSolution solve_lp(const LpProblem& lp);

} // namespace gkz

#endif // GKZMIRROR_SIMPLEX_HPP
