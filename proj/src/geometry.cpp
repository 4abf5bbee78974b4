#include "gkzmirror/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "gkzmirror/simplex.hpp"

namespace gkz {

namespace {

// Scale a rational vector to coprime integers (signs preserved).
std::vector<Int> to_coprime_integers(const std::vector<Rat>& x) {
    Int lcm = 1;
    for (const Rat& c : x)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z(x.size());
    Int g = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        z[i] = Rat(x[i] * lcm).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g > 1)
        for (Int& v : z) v /= g;
    return z;
}

void verify_certificate(const PointednessCertificate& cert) {
    for (size_t i = 0; i < cert.generators.size(); ++i) {
        if (dot(cert.w, cert.generators[i]) != cert.margins[i] ||
            cert.margins[i] < 1)
            throw error("internal: certificate margin verification failed");
    }
}

void verify_witness(const NonPointedWitness& wit, int nvars) {
    bool some_positive = false;
    std::vector<Int> sum(nvars, 0);
    for (size_t g = 0; g < wit.generators.size(); ++g) {
        const Int& c = wit.coefficients[g];
        if (c < 0) throw error("internal: witness coefficient negative");
        if (c > 0) some_positive = true;
        for (int i = 0; i < nvars; ++i) sum[i] += c * wit.generators[g][i];
    }
    if (!some_positive) throw error("internal: witness is identically zero");
    for (const Int& s : sum)
        if (s != 0) throw error("internal: witness combination is nonzero");
}

} // namespace

PointednessResult pointedness_certificate(const std::vector<Relation>& gens,
                                          int nvars) {
    const int M = static_cast<int>(gens.size());
    if (M == 0) {
        PointednessCertificate cert;
        cert.w.assign(nvars, Rat(0));
        return cert;
    }

    // First decide the two-sided question by the obstruction system:
    // nonnegative y with sum_g y_g g = 0 and sum_g y_g = 1.
    {
        LpProblem lp;
        lp.A.assign(nvars + 1, std::vector<Rat>(M, Rat(0)));
        lp.b.assign(nvars + 1, Rat(0));
        for (int g = 0; g < M; ++g) {
            for (int i = 0; i < nvars; ++i) lp.A[i][g] = gens[g][i];
            lp.A[nvars][g] = 1;
        }
        lp.b[nvars] = 1;
        lp.c.assign(M, Rat(0));
        LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::Optimal) {
            NonPointedWitness wit;
            wit.generators = gens;
            wit.coefficients = to_coprime_integers(sol.x);
            verify_witness(wit, nvars);
            return wit;
        }
    }

    // No obstruction, so w.g >= 1 is feasible: w = w+ - w-, slack s per
    // generator, g.w+ - g.w- - s = 1.
    LpProblem lp;
    lp.A.assign(M, std::vector<Rat>(2 * nvars + M, Rat(0)));
    lp.b.assign(M, Rat(1));
    for (int g = 0; g < M; ++g) {
        for (int i = 0; i < nvars; ++i) {
            lp.A[g][i] = gens[g][i];
            lp.A[g][nvars + i] = -gens[g][i];
        }
        lp.A[g][2 * nvars + g] = -1;
    }
    lp.c.assign(2 * nvars + M, Rat(0));
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw error("internal: certificate system unexpectedly infeasible");

    PointednessCertificate cert;
    cert.w.resize(nvars);
    for (int i = 0; i < nvars; ++i) cert.w[i] = sol.x[i] - sol.x[nvars + i];
    cert.generators = gens;
    for (const Relation& g : gens) cert.margins.push_back(dot(cert.w, g));
    verify_certificate(cert);
    return cert;
}

std::vector<std::pair<int, int>> duplicate_pairs(const AConfiguration& cfg) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < cfg.N; ++i)
        for (int j = i + 1; j < cfg.N; ++j)
            if (cfg.vectors[i] == cfg.vectors[j]) out.emplace_back(i + 1, j + 1);
    return out;
}

Report duplicate_vector_check(const AConfiguration& cfg) {
    Report r;
    r.check = "duplicate-vectors";
    r.target = cfg.name.empty() ? "configuration" : cfg.name;
    auto pairs = duplicate_pairs(cfg);
    r.pass = true;  // informational: duplicates downgrade, they do not fail
    r.details["duplicates"] = Json::array();
    for (auto [i, j] : pairs) r.details["duplicates"].push_back({i, j});
    r.details["pointedness_guaranteed"] = pairs.empty();
    return r;
}

namespace {

// Exact minimum of w . x over the depth-1 polytope of L_k:
// x_j >= 0 (j != k), sum x_j = 1, sum x_j a_j = a_k. Returns nullopt when
// the polytope is empty (L_k is trivial); otherwise the value and the
// minimizing vertex.
std::optional<std::pair<Rat, std::vector<Rat>>> depth1_minimum(
    const AConfiguration& cfg, int k, const std::vector<Rat>& w) {
    const int k0 = k - 1;
    std::vector<int> idx;
    for (int j = 0; j < cfg.N; ++j)
        if (j != k0) idx.push_back(j);
    const int F = static_cast<int>(idx.size());

    LpProblem lp;
    lp.A.assign(cfg.n + 1, std::vector<Rat>(F, Rat(0)));
    lp.b.assign(cfg.n + 1, Rat(0));
    for (int f = 0; f < F; ++f) {
        for (int i = 0; i < cfg.n; ++i) lp.A[i][f] = cfg.entry(i, idx[f]);
        lp.A[cfg.n][f] = 1;
    }
    for (int i = 0; i < cfg.n; ++i) lp.b[i] = cfg.entry(i, k0);
    lp.b[cfg.n] = 1;
    lp.c.assign(F, Rat(0));
    for (int f = 0; f < F; ++f) lp.c[f] = w[idx[f]];

    LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status != LpStatus::Optimal)
        throw error("internal: depth-1 polytope minimum cannot be unbounded");

    std::vector<Rat> x(cfg.N, Rat(0));
    for (int f = 0; f < F; ++f) x[idx[f]] = sol.x[f];
    return std::make_pair(sol.objective, x);
}

} // namespace

ConeGradingInfo cone_grading(const AConfiguration& cfg,
                             const std::vector<int>& active_ks,
                             long probe_depth, long node_cap) {
    std::vector<Relation> gens;
    for (int k : active_ks) {
        OrthantRelationSet set = enumerate_orthant(cfg, k, probe_depth, node_cap);
        gens.insert(gens.end(), set.relations.begin(), set.relations.end());
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    for (int round = 0; round < 1000; ++round) {
        PointednessResult res = pointedness_certificate(gens, cfg.N);
        if (std::holds_alternative<NonPointedWitness>(res)) {
            const auto& wit = std::get<NonPointedWitness>(res);
            std::ostringstream os;
            os << "no pointed grading: zero is a nonnegative combination of";
            for (size_t g = 0; g < wit.generators.size(); ++g)
                if (wit.coefficients[g] > 0)
                    os << ' ' << wit.coefficients[g].get_str() << '*'
                       << expvec_str(wit.generators[g]);
            throw NotPointed(os.str());
        }
        const auto& cert = std::get<PointednessCertificate>(res);

        ConeGradingInfo info;
        info.w.w = cert.w;
        info.generators = gens;
        bool cut_added = false;
        for (int k : active_ks) {
            auto opt = depth1_minimum(cfg, k, cert.w);
            if (!opt)
                throw error("internal: active index has a trivial sublattice");
            Rat alpha = -cert.w[k - 1] + opt->first;
            if (alpha > 0) {
                info.rate[k] = alpha;
                continue;
            }
            // The minimizing vertex scales to an integer relation in L_k
            // the current w fails on; add it and re-solve.
            std::vector<Rat> dir(cfg.N);
            for (int j = 0; j < cfg.N; ++j) dir[j] = opt->second[j];
            dir[k - 1] -= 1;
            std::vector<Int> zs = to_coprime_integers(dir);
            Relation cut(cfg.N);
            for (int j = 0; j < cfg.N; ++j) cut[j] = zs[j].get_si();
            if (std::find(gens.begin(), gens.end(), cut) != gens.end())
                throw error("internal: grading cut loop revisited a generator");
            gens.push_back(cut);
            std::sort(gens.begin(), gens.end());
            cut_added = true;
        }
        if (!cut_added) return info;
    }
    throw error("internal: grading cut loop failed to converge");
}

long depth_for_level(const Rat& target, const Rat& rate) {
    if (rate <= 0) throw error("depth_for_level needs a positive rate");
    Int d = rat_floor(target / rate);
    if (d < 1) return 0;
    return d.get_si();
}

bool orthant_nontrivial(const AConfiguration& cfg, int k) {
    if (k < 1 || k > cfg.N) throw error("index k out of range");
    return depth1_minimum(cfg, k, std::vector<Rat>(cfg.N, Rat(0))).has_value();
}

} // namespace gkz
