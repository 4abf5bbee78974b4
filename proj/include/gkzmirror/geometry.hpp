/**
 * @file geometry.hpp
 * @brief Pointedness certificates for the cone spanned by orthant relations,
 *        and the grading machinery combined series are built on.
 *
 * A certificate is a rational functional w with w.g >= 1 on every certified
 * generator; the two-sided alternative is a nonnegative rational combination
 * of the generators summing to zero. Both answers are re-verified exactly
 * after the solve.
 */
#ifndef GKZMIRROR_GEOMETRY_HPP
#define GKZMIRROR_GEOMETRY_HPP

#include <map>
#include <variant>
#include <vector>

#include "gkzmirror/config.hpp"
#include "gkzmirror/report.hpp"
#include "gkzmirror/series.hpp"

namespace gkz {

struct PointednessCertificate {
    std::vector<Rat> w;
    std::vector<Relation> generators;
    std::vector<Rat> margins;          // w . g per generator, all >= 1
};

// Nonnegative integers c_g, not all zero, with sum_g c_g g = 0.
struct NonPointedWitness {
    std::vector<Relation> generators;
    std::vector<Int> coefficients;
};

using PointednessResult = std::variant<PointednessCertificate, NonPointedWitness>;

// Exact LP feasibility of {w : w.g >= 1 for all g}. Deterministic output.
PointednessResult pointedness_certificate(const std::vector<Relation>& gens,
                                          int nvars);

std::vector<std::pair<int, int>> duplicate_pairs(const AConfiguration& cfg);
Report duplicate_vector_check(const AConfiguration& cfg);

// A grading valid for the *entire* sublattices L_k (k in active_ks), not
// just an enumerated slab: w together with per-k rates alpha_k > 0 such
// that w.l >= alpha_k * (-l_k) for every l in L_k. Obtained by a cutting
// loop that alternates the certificate LP with an exact depth-1 polytope
// minimum per k. Throws NotPointed when no such grading exists (which is
// also the duplicate-vector policy for combined series).
struct ConeGradingInfo {
    Grading w;
    std::map<int, Rat> rate;           // alpha_k per active k (1-based)
    std::vector<Relation> generators;  // certified generator list
};

ConeGradingInfo cone_grading(const AConfiguration& cfg,
                             const std::vector<int>& active_ks,
                             long probe_depth = 6,
                             long node_cap = kDefaultNodeCap);

// Depth bound on -l_k that guarantees completeness of L_k up to w-level
// `target` given rate alpha_k: floor(target / alpha_k).
long depth_for_level(const Rat& target, const Rat& rate);

// True iff L_k contains a nonzero element, decided exactly by rational
// feasibility of the depth-1 polytope (any rational point scales to an
// integer relation).
bool orthant_nontrivial(const AConfiguration& cfg, int k);

} // namespace gkz

#endif // GKZMIRROR_GEOMETRY_HPP
