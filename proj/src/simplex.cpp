#include "gkzmirror/simplex.hpp"

#include "gkzmirror/errors.hpp"

namespace gkz {

namespace {

// Dense tableau with explicit reduced-cost row. Column layout:
// [0, n) structural, [n, n+m) artificial, column n+m the right-hand side.
struct Tableau {
    int m, n;
    std::vector<std::vector<Rat>> t;   // m rows
    std::vector<Rat> cost;             // reduced costs, length n+m
    Rat objective = 0;                 // current objective value
    std::vector<int> basis;            // basic variable per row
    std::vector<bool> allowed;         // artificials are disabled once out

    int rhs() const { return n + m; }

    void pivot(int r, int e) {
        Rat piv = t[r][e];
        for (int j = 0; j <= rhs(); ++j) t[r][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][e] == 0) continue;
            Rat f = t[i][e];
            for (int j = 0; j <= rhs(); ++j) t[i][j] -= f * t[r][j];
        }
        if (cost[e] != 0) {
            Rat f = cost[e];
            for (int j = 0; j < rhs(); ++j) cost[j] -= f * t[r][j];
            objective += f * t[r][rhs()];
        }
        basis[r] = e;
    }

    // Bland: entering = lowest-index allowed column with negative reduced
    // cost; leaving = min-ratio row, ties by lowest basic variable index.
    // Returns false at optimality; throws on unboundedness.
    bool step() {
        int e = -1;
        for (int j = 0; j < rhs(); ++j) {
            if (allowed[j] && cost[j] < 0) { e = j; break; }
        }
        if (e < 0) return false;
        int r = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (t[i][e] <= 0) continue;
            Rat ratio = t[i][rhs()] / t[i][e];
            if (r < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[r])) {
                r = i;
                best = ratio;
            }
        }
        if (r < 0) throw error("lp: unbounded");
        if (basis[r] >= n) allowed[basis[r]] = false;
        pivot(r, e);
        return true;
    }
};

} // namespace

LpSolution solve_lp(const LpProblem& lp) {
    const int m = static_cast<int>(lp.A.size());
    const int n = m ? static_cast<int>(lp.A[0].size())
                    : static_cast<int>(lp.c.size());
    if (static_cast<int>(lp.b.size()) != m ||
        static_cast<int>(lp.c.size()) != n)
        throw error("lp: inconsistent dimensions");

    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.t.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
    tab.basis.resize(m);
    tab.allowed.assign(n + m, true);
    for (int i = 0; i < m; ++i) {
        bool neg = lp.b[i] < 0;
        for (int j = 0; j < n; ++j) tab.t[i][j] = neg ? -lp.A[i][j] : lp.A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][n + m] = neg ? -lp.b[i] : lp.b[i];
        tab.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    tab.cost.assign(n + m, Rat(0));
    tab.objective = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tab.cost[j] -= tab.t[i][j];
        tab.objective += tab.t[i][n + m];
    }
    while (tab.step()) {}
    if (tab.objective != 0) {
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    // Drive zero-valued artificials out of the basis where a structural
    // pivot exists; all-zero rows are redundant and stay put harmlessly.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                tab.allowed[tab.basis[i]] = false;
                tab.pivot(i, j);
                break;
            }
        }
    }
    for (int j = n; j < n + m; ++j) tab.allowed[j] = false;

    // Phase 2: reduced costs of the real objective against the current basis.
    tab.cost.assign(n + m, Rat(0));
    tab.objective = 0;
    for (int j = 0; j < n; ++j) tab.cost[j] = lp.c[j];
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        Rat cb = lp.c[tab.basis[i]];
        if (cb == 0) continue;
        for (int j = 0; j < n + m; ++j) tab.cost[j] -= cb * tab.t[i][j];
        tab.objective += cb * tab.t[i][n + m];
    }
    try {
        while (tab.step()) {}
    } catch (const error&) {
        LpSolution sol;
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.objective = tab.objective;
    sol.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][n + m];
    return sol;
}

} // namespace gkz
