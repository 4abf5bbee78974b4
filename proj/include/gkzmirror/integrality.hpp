/**
 * @file integrality.hpp
 * @brief Integrality of exp G_k and of mirror maps, checked two independent
 *        ways: a per-prime criterion on p G_k(lambda) - G_k(lambda^p), and
 *        direct exponentiation over Q with a denominator-1 check (which
 *        covers all primes at once). A third route re-derives the per-prime
 *        verdict from multinomial congruences on each relation, so the
 *        series machinery and the combinatorics check each other.
 */
#ifndef GKZMIRROR_INTEGRALITY_HPP
#define GKZMIRROR_INTEGRALITY_HPP

#include <optional>
#include <vector>

#include "gkzmirror/config.hpp"
#include "gkzmirror/report.hpp"
#include "gkzmirror/series.hpp"
#include "gkzmirror/solutions.hpp"

namespace gkz {

struct IntegralityReport {
    std::string target;
    Rat levels_checked = 0;
    std::vector<Int> primes;           // empty for the all-primes check
    bool pass = true;
    std::optional<WitnessTerm> worst;  // minimal valuation margin
    Json details = Json::object();

    Json to_json() const;
};

// Every coefficient of p G_k(lambda) - G_k(lambda^p) at level <= m_max has
// v_p >= 1. Requires gk built to depth >= m_max.
IntegralityReport dwork_criterion(const GkSeries& gk, const Int& p,
                                  long m_max);

// Every coefficient of exp G_k up to level m_max is an exact integer.
IntegralityReport exp_integrality(const GkSeries& gk, long m_max);

// The same per-prime verdict derived per relation from multinomial
// congruences: p-integrality of multinomial(-l_k; l)/(-l_k) when p divides
// no coordinate, the scaled-difference congruence for every l, and the
// sign-exceptional sum form when p = 2 and l_k is odd.
Report dwork_congruences(const AConfiguration& cfg, int k, long m_max,
                         const std::vector<Int>& primes,
                         long node_cap = kDefaultNodeCap);

// The mirror series q / lambda^l~ = exp(sum_k l~_k G_k), computed as the
// product prod_k (exp G_k)^(l~_k) and cross-checked against exp of the sum,
// complete up to grading level m_max, plus its integrality report.
std::pair<ConeSeries, IntegralityReport> mirror_map(
    const AConfiguration& cfg, const Relation& ltilde, long m_max,
    long node_cap = kDefaultNodeCap);

} // namespace gkz

#endif // GKZMIRROR_INTEGRALITY_HPP
