/**
 * @file congruence.hpp
 * @brief Exact divisibility checks for multinomial coefficients.
 *
 * Two facts are verified per (multi-index, prime) pair: the multinomial
 * coefficient is divisible by p^(a-b) where p^a || total and p^b || every
 * part, and scaling every part by p changes the multinomial by a multiple
 * of p^(a+1). Both are theorems; a failure indicates a defect in this
 * arithmetic stack, which is why the scan doubles as a self-test.
 */
#ifndef GKZMIRROR_CONGRUENCE_HPP
#define GKZMIRROR_CONGRUENCE_HPP

#include <vector>

#include "gkzmirror/rational.hpp"
#include "gkzmirror/report.hpp"

namespace gkz {

struct MultiIndex {
    std::vector<unsigned long> parts;

    unsigned long total() const {
        unsigned long e = 0;
        for (unsigned long p : parts) e += p;
        return e;
    }

    MultiIndex scaled(unsigned long factor) const {
        MultiIndex m = *this;
        for (unsigned long& p : m.parts) p *= factor;
        return m;
    }
};

// e! / prod e_i!, computed as a product of exact binomials.
Int multinomial(const MultiIndex& m);

// Same value by the direct factorial quotient; kept permanently as the
// second route (the two are compared wherever the scan runs).
Int multinomial_by_factorials(const MultiIndex& m);

// v_p(e!) by Legendre's formula, sum floor(e/p^i).
Valuation legendre_factorial_valuation(unsigned long e, const Int& p);

// Divisibility of the multinomial by p^(a-b), a = v_p(total),
// b = min_i v_p(e_i), with v_p(0) = +inf (so a-b is 0 when all parts are 0).
Report check_divisibility(const MultiIndex& m, const Int& p);

// Divisibility of multinomial(p*m) - multinomial(m) by p^(a+1).
Report check_scaling_difference(const MultiIndex& m, const Int& p);

// Exhaustive scan over all multi-indices with <= N_max parts and total
// <= e_max, for every listed prime; both checks plus the two-route
// multinomial comparison. Fails with the minimal counterexample.
Report scan_congruences(int N_max, unsigned long e_max,
                        const std::vector<Int>& primes);

} // namespace gkz

#endif // GKZMIRROR_CONGRUENCE_HPP
