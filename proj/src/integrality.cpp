#include "gkzmirror/integrality.hpp"

#include <algorithm>

#include "gkzmirror/congruence.hpp"
#include "gkzmirror/geometry.hpp"

namespace gkz {

Json IntegralityReport::to_json() const {
    Json j;
    j["target"] = target;
    j["levels_checked"] = rat_str(levels_checked);
    j["primes"] = Json::array();
    for (const Int& p : primes) j["primes"].push_back(p.get_str());
    j["verdict"] = pass ? "pass" : "fail";
    if (worst) j["worst_witness"] = worst->to_json();
    if (!details.empty()) j["details"] = details;
    return j;
}

IntegralityReport dwork_criterion(const GkSeries& gk, const Int& p,
                                  long m_max) {
    require_prime(p);
    if (gk.m_max < m_max)
        throw InsufficientTruncation(
            "G_k built to depth " + std::to_string(gk.m_max) +
            " but the check needs " + std::to_string(m_max));
    if (!p.fits_slong_p()) throw error("prime does not fit a machine word");

    IntegralityReport rep;
    rep.target = "p*G_" + std::to_string(gk.k) + "(lambda) - G_" +
                 std::to_string(gk.k) + "(lambda^p)";
    rep.levels_checked = m_max;
    rep.primes = {p};

    // Both parts are complete to level m_max, so the difference is too.
    ConeSeries scaled = scale(gk.series, Rat(p)).truncated(Rat(m_max));
    ConeSeries substituted =
        substitute_power(gk.series, p.get_si()).truncated(Rat(m_max));
    ConeSeries diff = sub(scaled, substituted);

    std::optional<long> worst_margin;
    long terms = 0;
    for (const auto& [u, c] : diff.terms()) {
        ++terms;
        Valuation v = p_valuation(c, p);
        if (!v.finite) continue;
        long margin = v.v - 1;
        if (!worst_margin || margin < *worst_margin) {
            worst_margin = margin;
            rep.worst = WitnessTerm{u, c, "margin " + std::to_string(margin)};
        }
        if (margin < 0) rep.pass = false;
    }
    rep.details["terms_checked"] = terms;
    if (worst_margin) rep.details["worst_margin"] = *worst_margin;
    return rep;
}

IntegralityReport exp_integrality(const GkSeries& gk, long m_max) {
    if (gk.m_max < m_max)
        throw InsufficientTruncation(
            "G_k built to depth " + std::to_string(gk.m_max) +
            " but the check needs " + std::to_string(m_max));

    IntegralityReport rep;
    rep.target = "exp G_" + std::to_string(gk.k);
    rep.levels_checked = m_max;

    ConeSeries e = exp_series(gk.series.truncated(Rat(m_max)));
    Int worst_den = 1;
    long terms = 0;
    for (const auto& [u, c] : e.terms()) {
        ++terms;
        if (c.get_den() > worst_den) {
            worst_den = c.get_den();
            rep.worst = WitnessTerm{u, c, "denominator " + worst_den.get_str()};
            rep.pass = false;
        }
    }
    rep.details["terms_checked"] = terms;
    rep.details["all_integers"] = rep.pass;
    return rep;
}

namespace {

// Multinomial over the coordinates j != k of a relation in L_k, optionally
// scaled by p. The top index is -l_k = sum of the parts.
MultiIndex off_k_parts(const Relation& l, int k, long factor = 1) {
    MultiIndex m;
    for (size_t j = 0; j < l.size(); ++j) {
        if (static_cast<int>(j) == k - 1) continue;
        m.parts.push_back(static_cast<unsigned long>(l[j] * factor));
    }
    return m;
}

} // namespace

Report dwork_congruences(const AConfiguration& cfg, int k, long m_max,
                         const std::vector<Int>& primes, long node_cap) {
    for (const Int& p : primes) require_prime(p);

    Report r;
    r.check = "dwork-congruences";
    r.target = "G_" + std::to_string(k) + " coefficients to depth " +
               std::to_string(m_max);
    r.valid_level = Rat(m_max);

    OrthantRelationSet set = enumerate_orthant(cfg, k, m_max, node_cap);
    long checks = 0;
    for (const Relation& l : set.relations) {
        const long depth = -l[k - 1];
        const Int m_int(depth);
        const MultiIndex base = off_k_parts(l, k);
        const Int mult = multinomial(base);

        for (const Int& p : primes) {
            if (!p.fits_slong_p())
                throw error("prime does not fit a machine word");
            const long pl = p.get_si();

            Int g = 0;
            for (long e : l) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(e).get_mpz_t());
            const bool p_divides_all = mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t());

            // Unit-coefficient congruence: multinomial(-l_k; l)/(-l_k) is
            // p-integral when p misses some coordinate.
            if (!p_divides_all) {
                ++checks;
                Valuation vm = p_valuation(mult, p);
                Valuation va = p_valuation(m_int, p);
                if (!vm.at_least(va)) {
                    r.fail_with(WitnessTerm{l, Rat(mult),
                                            "coefficient not p-integral, p=" +
                                                p.get_str()});
                }
            }

            // Scaled-difference congruence, with the sign flip folded in:
            // v_p(p c_{pl} - c_l) >= 1 for the actual signed coefficients.
            ++checks;
            Int scaled_mult = multinomial(off_k_parts(l, k, pl));
            // c_l = sign_l * mult / depth with sign_l = (-1)^(depth-1).
            Rat c_l(mult, m_int);
            c_l.canonicalize();
            if (depth % 2 == 0) c_l = -c_l;
            Rat c_pl(scaled_mult, Int(pl) * m_int);
            c_pl.canonicalize();
            if ((pl * depth) % 2 == 0) c_pl = -c_pl;
            Valuation vdiff = p_valuation(Rat(p * c_pl - c_l), p);
            if (!vdiff.at_least(1)) {
                r.fail_with(WitnessTerm{l, p * c_pl - c_l,
                                        "difference congruence fails, p=" +
                                            p.get_str()});
            }

            // Exceptional case p = 2, l_k odd: the sign flip turns the
            // difference into a sum of multinomials.
            if (pl == 2 && depth % 2 == 1) {
                ++checks;
                Valuation vsum =
                    p_valuation(Rat(scaled_mult + mult, m_int), Int(2));
                if (!vsum.at_least(1)) {
                    r.fail_with(WitnessTerm{l, Rat(scaled_mult + mult),
                                            "exceptional sum form fails"});
                }
            }
        }
    }
    r.details["relations"] = static_cast<long>(set.relations.size());
    r.details["checks"] = checks;
    Json pj = Json::array();
    for (const Int& p : primes) pj.push_back(p.get_str());
    r.details["primes"] = pj;
    return r;
}

std::pair<ConeSeries, IntegralityReport> mirror_map(const AConfiguration& cfg,
                                                    const Relation& ltilde,
                                                    long m_max,
                                                    long node_cap) {
    if (!is_relation(cfg, ltilde))
        throw error("mirror_map: " + expvec_str(ltilde) + " is not in L");

    IntegralityReport rep;
    rep.target = "exp(sum_k l_k G_k) for l = " + expvec_str(ltilde);
    rep.levels_checked = m_max;

    // Active indices: nonzero weight and a nontrivial sublattice.
    std::vector<int> active;
    for (int k = 1; k <= cfg.N; ++k) {
        if (ltilde[k - 1] != 0 && orthant_nontrivial(cfg, k))
            active.push_back(k);
    }

    Grading w = zero_grading(cfg.N);
    std::map<int, Rat> rate;
    if (active.size() == 1) {
        w = orthant_grading(cfg.N, active[0]);
        rate[active[0]] = 1;
    } else if (active.size() > 1) {
        if (!duplicate_pairs(cfg).empty())
            throw NotPointed(
                "duplicate vectors: no pointedness guarantee for a combined "
                "series");
        ConeGradingInfo info = cone_grading(cfg, active, 6, node_cap);
        w = info.w;
        rate = info.rate;
    }

    const Rat bound(m_max);
    ConeSeries product = ConeSeries::constant(w, bound, 1);
    ConeSeries weighted_sum(w, bound);
    for (int k : active) {
        long depth = depth_for_level(bound, rate.at(k));
        if (depth < 1) continue;  // nothing of L_k reaches the bound
        GkSeries gk = build_gk(cfg, k, depth, node_cap);
        ConeSeries part = gk.series.regraded(w, bound);
        weighted_sum = add(weighted_sum, scale(part, Rat(ltilde[k - 1])));
        product = mul(product, pow_int(exp_series(part), ltilde[k - 1]));
    }

    // Cross-check the product formula against exp of the combined series.
    ConeSeries direct = exp_series(weighted_sum);
    if (!(direct == product))
        throw error("internal: mirror product route disagrees with exp route");

    Int worst_den = 1;
    long terms = 0;
    for (const auto& [u, c] : product.terms()) {
        ++terms;
        if (c.get_den() > worst_den) {
            worst_den = c.get_den();
            rep.worst = WitnessTerm{u, c, "denominator " + worst_den.get_str()};
            rep.pass = false;
        }
    }
    rep.details["terms_checked"] = terms;
    rep.details["active_indices"] = active;
    rep.details["grading"] = Json::array();
    for (const Rat& c : w.w) rep.details["grading"].push_back(rat_str(c));
    return {product, rep};
}

} // namespace gkz
