/**
 * @file solutions.hpp
 * @brief The logarithmic solution series G_k and the operator checks on
 *        them: Euler annihilation (termwise exact) and box-operator
 *        annihilation up to the recorded valid level.
 *
 * G_k is supported on the orthant sublattice L_k, with the coefficient of
 * lambda^l equal to (-1)^(-l_k-1) (-l_k-1)! / prod_{j != k} l_j!. Together
 * with log lambda_k it is annihilated by every box operator, and for any
 * relation l~ the combination log lambda^l~ + sum_k l~_k G_k solves the
 * full system with zero parameter.
 */
#ifndef GKZMIRROR_SOLUTIONS_HPP
#define GKZMIRROR_SOLUTIONS_HPP

#include <vector>

#include "gkzmirror/config.hpp"
#include "gkzmirror/report.hpp"
#include "gkzmirror/series.hpp"

namespace gkz {

struct GkSeries {
    int k = 0;            // distinguished index, 1-based
    ConeSeries series;    // orthant grading -e_k, bound m_max
    long m_max = 0;       // enumeration depth: all l with -l_k <= m_max
};

// Exact coefficient of lambda^l in G_k.
Rat gk_coefficient(const Relation& l, int k);

GkSeries build_gk(const AConfiguration& cfg, int k, long m_max,
                  long node_cap = kDefaultNodeCap);

// log lambda_k + G_k as a log series (the box-operator test object).
LogSeries log_lambda_plus_gk(const GkSeries& gk);

// log lambda^l~ + sum_k l~_k G_k. All G_k must be supplied at a common
// depth. When more than one G_k enters with a nonzero weight the series
// parts are rebuilt under a common pointed grading; configurations with
// duplicate vectors are rejected with NotPointed.
LogSeries log_solution(const AConfiguration& cfg, const Relation& ltilde,
                       const std::vector<GkSeries>& gks);

// Euler-operator residuals. The pure-series form is termwise: every stored
// exponent must satisfy sum_j u_j a_ij = 0 for all i (exact at any
// truncation). The log form computes the residual series exactly (the
// operators lambda_j d/d lambda_j never shift exponents).
Report check_euler(const AConfiguration& cfg, const ConeSeries& f,
                   const std::string& target = "series");
Report check_euler(const AConfiguration& cfg, const LogSeries& f,
                   const std::string& target = "series");

// Box-operator residuals for every relation in rels; each residual must
// vanish identically at levels up to its recorded valid bound.
Report check_box(const AConfiguration& cfg, const LogSeries& f,
                 const std::vector<Relation>& rels,
                 const std::string& target = "series");

// The finite relation set box checks run over: the kernel basis united with
// every relation of coordinate norm <= coord_bound, deduplicated, sorted.
std::vector<Relation> box_check_relations(const AConfiguration& cfg,
                                          long coord_bound,
                                          long node_cap = kDefaultNodeCap);

} // namespace gkz

#endif // GKZMIRROR_SOLUTIONS_HPP
