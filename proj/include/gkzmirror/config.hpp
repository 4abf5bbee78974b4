/**
 * @file config.hpp
 * @brief Vector configurations A = {a_1,...,a_N} in Z^n, the relation
 *        lattice L = {l : sum_j l_j a_j = 0}, and bounded enumeration of
 *        the one-negative-coordinate sublattices L_k.
 *
 * Validity of a configuration includes the existence of a rational unit
 * form h with h(a_j) = 1 for all j; h is computed, not supplied, and its
 * existence forces sum_j l_j = 0 on every relation.
 */
#ifndef GKZMIRROR_CONFIG_HPP
#define GKZMIRROR_CONFIG_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "gkzmirror/rational.hpp"

namespace gkz {

// A lattice relation l in Z^N with sum_j l_j a_j = 0.
using Relation = ExpVec;

struct AConfiguration {
    int n = 0;                              // ambient dimension
    int N = 0;                              // number of vectors
    std::vector<ExpVec> vectors;            // a_j, each of length n
    std::vector<Rat> unit_form;             // h with h . a_j = 1 for all j
    std::string name;

    // a_{ij}: i-th coordinate (0-based) of the j-th vector (0-based).
    long entry(int i, int j) const { return vectors[j][i]; }
};

// Relations of L_k = {l in L : l_k <= 0, l_j >= 0 for j != k} with
// 1 <= -l_k <= level_bound, sorted by (-l_k, lex). The zero relation is
// excluded. `complete` asserts the list is exhaustive under the bound.
struct OrthantRelationSet {
    int k = 0;                              // distinguished index, 1-based
    long level_bound = 0;                   // m_max
    std::vector<Relation> relations;
    bool complete = false;
};

inline constexpr long kDefaultNodeCap = 10'000'000;

// Builds a validated configuration: computes h by exact echelon reduction
// (free variables set to 0). Throws NoUnitForm (with an exact infeasibility
// witness in the message) when no h exists, and error on malformed input.
AConfiguration validate_configuration(int n, std::vector<ExpVec> vectors,
                                      std::string name = "");

// True iff sum_j l_j a_j = 0.
bool is_relation(const AConfiguration& cfg, const Relation& l);

// Integer basis of L, each vector primitive, deterministic order
// (lexicographic). Empty when the a_j are linearly independent.
std::vector<Relation> kernel_basis(const AConfiguration& cfg);

// Exhaustive bounded search of L_k: all l with 1 <= -l_k <= m_max, found by
// depth-first enumeration over the coordinates j != k with per-coordinate
// range pruning. Throws BudgetExceeded past node_cap search nodes.
OrthantRelationSet enumerate_orthant(const AConfiguration& cfg, int k,
                                     long m_max,
                                     long node_cap = kDefaultNodeCap);

// All relations with |l_j| <= coord_bound, including the zero-excluded
// sign patterns of every orthant; used as the finite slab for box-operator
// checks. Deterministic order.
std::vector<Relation> relation_slab(const AConfiguration& cfg,
                                    long coord_bound,
                                    long node_cap = kDefaultNodeCap);

// ---- configuration files ------------------------------------------------
// Schema: {"name": str (optional), "n": int, "vectors": [[int,...],...]}.
// Unknown keys are rejected.

AConfiguration config_from_json(const nlohmann::json& j);
AConfiguration load_config_file(const std::string& path);

} // namespace gkz

#endif // GKZMIRROR_CONFIG_HPP
