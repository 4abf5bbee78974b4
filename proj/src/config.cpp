#include "gkzmirror/config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gkz {

namespace {

// Reduced row echelon form over Q, in place. Returns the pivot column of
// each row (-1 for zero rows). Deterministic: first nonzero pivot, rows in
// natural order.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i][c] != 0) { pr = i; break; }
        }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    return pivot_col;
}

// Scale a rational vector to a primitive integer vector (clear denominators,
// divide by content). Zero stays zero.
ExpVec primitive_integer(const std::vector<Rat>& x) {
    Int lcm = 1;
    for (const Rat& c : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z(x.size());
    Int content = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        Rat s = x[i] * lcm;
        z[i] = s.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    ExpVec out(x.size(), 0);
    if (content == 0) return out;
    for (size_t i = 0; i < x.size(); ++i) {
        Int q = z[i] / content;
        out[i] = q.get_si();
    }
    return out;
}

// Sign convention for basis vectors: majority of nonzero entries positive,
// ties broken by the first nonzero entry.
void normalize_sign(ExpVec& l) {
    int pos = 0, neg = 0;
    long first = 0;
    for (long e : l) {
        if (e > 0) ++pos;
        else if (e < 0) ++neg;
        if (first == 0) first = e;
    }
    bool flip = neg > pos || (neg == pos && first < 0);
    if (flip) for (long& e : l) e = -e;
}

void check_relation_invariants(const AConfiguration& cfg, const Relation& l) {
    if (!is_relation(cfg, l))
        throw error("internal: vector is not a relation: " + expvec_str(l));
    long s = std::accumulate(l.begin(), l.end(), 0L);
    if (s != 0)
        throw error("internal: relation violates the zero-sum property: " +
                    expvec_str(l));
}

} // namespace

AConfiguration validate_configuration(int n, std::vector<ExpVec> vectors,
                                      std::string name) {
    if (n < 1) throw error("ambient dimension must be positive");
    if (vectors.empty()) throw error("configuration needs at least one vector");
    for (const ExpVec& a : vectors) {
        if (static_cast<int>(a.size()) != n)
            throw error("vector " + expvec_str(a) + " does not have length " +
                        std::to_string(n));
    }

    AConfiguration cfg;
    cfg.n = n;
    cfg.N = static_cast<int>(vectors.size());
    cfg.vectors = std::move(vectors);
    cfg.name = std::move(name);

    // Solve h . a_j = 1 for all j: N equations in n unknowns. Augment with
    // an identity block to carry row multipliers for the infeasibility
    // witness.
    const int N = cfg.N;
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(n + 1 + N, 0));
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < n; ++i) m[j][i] = cfg.vectors[j][i];
        m[j][n] = 1;
        m[j][n + 1 + j] = 1;
    }
    rref(m);

    for (int r = 0; r < N; ++r) {
        bool zero_lhs = true;
        for (int c = 0; c < n; ++c)
            if (m[r][c] != 0) { zero_lhs = false; break; }
        if (zero_lhs && m[r][n] != 0) {
            // Row multipliers y with sum_j y_j a_j = 0 but sum_j y_j != 0.
            std::ostringstream os;
            os << "no unit form h with h(a_j) = 1 exists; witness multipliers (";
            for (int j = 0; j < N; ++j) {
                if (j) os << ',';
                os << rat_str(m[r][n + 1 + j] / m[r][n]);
            }
            os << ") combine the equations into 0 = 1";
            throw NoUnitForm(os.str());
        }
    }

    // Read h off the echelon form, free variables 0.
    cfg.unit_form.assign(n, Rat(0));
    for (int r = 0; r < N; ++r) {
        int pc = -1;
        for (int c = 0; c < n; ++c)
            if (m[r][c] != 0) { pc = c; break; }
        if (pc >= 0) cfg.unit_form[pc] = m[r][n];
    }

    // Exact re-verification of h on every vector.
    for (int j = 0; j < N; ++j) {
        if (dot(cfg.unit_form, cfg.vectors[j]) != 1)
            throw error("internal: computed unit form fails on vector " +
                        std::to_string(j + 1));
    }
    return cfg;
}

bool is_relation(const AConfiguration& cfg, const Relation& l) {
    if (static_cast<int>(l.size()) != cfg.N) return false;
    for (int i = 0; i < cfg.n; ++i) {
        long s = 0;
        for (int j = 0; j < cfg.N; ++j) s += l[j] * cfg.entry(i, j);
        if (s != 0) return false;
    }
    return true;
}

std::vector<Relation> kernel_basis(const AConfiguration& cfg) {
    const int n = cfg.n, N = cfg.N;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(N, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) m[i][j] = cfg.entry(i, j);
    std::vector<int> pivot_col = rref(m);

    std::vector<bool> is_pivot(N, false);
    for (int r = 0; r < n; ++r)
        if (pivot_col[r] >= 0) is_pivot[pivot_col[r]] = true;

    std::vector<Relation> basis;
    for (int f = 0; f < N; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(N, 0);
        x[f] = 1;
        for (int r = 0; r < n; ++r) {
            if (pivot_col[r] >= 0) x[pivot_col[r]] = -m[r][f];
        }
        ExpVec l = primitive_integer(x);
        normalize_sign(l);
        check_relation_invariants(cfg, l);
        basis.push_back(std::move(l));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

namespace {

struct OrthantSearch {
    const AConfiguration& cfg;
    int k0;                         // distinguished index, 0-based
    std::vector<int> free_idx;      // coordinates j != k, ascending
    std::vector<long> lo_coef, hi_coef;  // suffix min/max of a_{ij} per dim
    long node_cap;
    long nodes = 0;
    std::vector<Relation> out;

    OrthantSearch(const AConfiguration& c, int k0_, long cap)
        : cfg(c), k0(k0_), node_cap(cap) {
        for (int j = 0; j < cfg.N; ++j)
            if (j != k0) free_idx.push_back(j);
        const int F = static_cast<int>(free_idx.size());
        // Suffix extrema of the coordinate entries over the remaining free
        // positions: used to prune branches whose residual target is outside
        // the reachable interval.
        lo_coef.assign((F + 1) * cfg.n, 0);
        hi_coef.assign((F + 1) * cfg.n, 0);
        for (int i = 0; i < cfg.n; ++i) {
            lo_coef[F * cfg.n + i] = 0;
            hi_coef[F * cfg.n + i] = 0;
        }
        for (int pos = F - 1; pos >= 0; --pos) {
            int j = free_idx[pos];
            for (int i = 0; i < cfg.n; ++i) {
                long a = cfg.entry(i, j);
                long lo = a, hi = a;
                if (pos + 1 < F) {
                    lo = std::min(lo, lo_coef[(pos + 1) * cfg.n + i]);
                    hi = std::max(hi, hi_coef[(pos + 1) * cfg.n + i]);
                } else {
                    lo = std::min(lo, 0L);
                    hi = std::max(hi, 0L);
                }
                lo_coef[pos * cfg.n + i] = lo;
                hi_coef[pos * cfg.n + i] = hi;
            }
        }
    }

    bool reachable(int pos, long budget, const std::vector<long>& target) const {
        // Over the free coordinates from `pos` on, with total weight
        // `budget`, the i-th component of sum l_j a_j spans
        // [budget*min, budget*max].
        for (int i = 0; i < cfg.n; ++i) {
            long lo = budget * lo_coef[pos * cfg.n + i];
            long hi = budget * hi_coef[pos * cfg.n + i];
            if (target[i] < lo || target[i] > hi) return false;
        }
        return true;
    }

    void dfs(int pos, long budget, std::vector<long>& target, ExpVec& l, long m) {
        if (++nodes > node_cap)
            throw BudgetExceeded("orthant enumeration exceeded node cap " +
                                 std::to_string(node_cap));
        const int F = static_cast<int>(free_idx.size());
        if (pos == F - 1) {
            // Last coordinate takes the whole remaining budget.
            int j = free_idx[pos];
            for (int i = 0; i < cfg.n; ++i)
                if (target[i] != budget * cfg.entry(i, j)) return;
            l[j] = budget;
            Relation rel = l;
            rel[k0] = -m;
            out.push_back(std::move(rel));
            l[j] = 0;
            return;
        }
        int j = free_idx[pos];
        for (long v = 0; v <= budget; ++v) {
            if (v > 0)
                for (int i = 0; i < cfg.n; ++i) target[i] -= cfg.entry(i, j);
            if (reachable(pos + 1, budget - v, target)) {
                l[j] = v;
                dfs(pos + 1, budget - v, target, l, m);
                l[j] = 0;
            }
        }
        for (int i = 0; i < cfg.n; ++i) target[i] += budget * cfg.entry(i, j);
    }

    void run(long m_max) {
        const int F = static_cast<int>(free_idx.size());
        for (long m = 1; m <= m_max; ++m) {
            std::vector<long> target(cfg.n);
            for (int i = 0; i < cfg.n; ++i) target[i] = m * cfg.entry(i, k0);
            ExpVec l(cfg.N, 0);
            if (F == 0) continue;  // N = 1: no free coordinates, L_k = {0}
            if (!reachable(0, m, target)) continue;
            dfs(0, m, target, l, m);
        }
    }
};

} // namespace

OrthantRelationSet enumerate_orthant(const AConfiguration& cfg, int k,
                                     long m_max, long node_cap) {
    if (k < 1 || k > cfg.N) throw error("index k out of range");
    if (m_max < 1) throw error("level bound must be >= 1");

    OrthantSearch search(cfg, k - 1, node_cap);
    search.run(m_max);

    OrthantRelationSet set;
    set.k = k;
    set.level_bound = m_max;
    set.relations = std::move(search.out);
    std::sort(set.relations.begin(), set.relations.end(),
              [k](const Relation& a, const Relation& b) {
                  long da = -a[k - 1], db = -b[k - 1];
                  if (da != db) return da < db;
                  return a < b;
              });
    set.relations.erase(
        std::unique(set.relations.begin(), set.relations.end()),
        set.relations.end());
    for (const Relation& l : set.relations) {
        check_relation_invariants(cfg, l);
        long depth = -l[k - 1];
        long others = depth + std::accumulate(l.begin(), l.end(), 0L);
        if (depth < 1 || others != depth)
            throw error("internal: orthant sign pattern violated");
    }
    set.complete = true;
    return set;
}

std::vector<Relation> relation_slab(const AConfiguration& cfg,
                                    long coord_bound, long node_cap) {
    if (coord_bound < 0) throw error("coordinate bound must be >= 0");
    // Plain box scan; N and the bound are small wherever this is used.
    std::vector<Relation> out;
    ExpVec l(cfg.N, -coord_bound);
    long nodes = 0;
    while (true) {
        if (++nodes > node_cap)
            throw BudgetExceeded("relation slab scan exceeded node cap");
        if (is_relation(cfg, l) &&
            std::any_of(l.begin(), l.end(), [](long e) { return e != 0; }))
            out.push_back(l);
        int pos = cfg.N - 1;
        while (pos >= 0 && l[pos] == coord_bound) l[pos--] = -coord_bound;
        if (pos < 0) break;
        ++l[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

AConfiguration config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw BadConfigFile("configuration must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "name" && it.key() != "n" && it.key() != "vectors")
            throw BadConfigFile("unknown key \"" + it.key() + "\"");
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw BadConfigFile("missing integer field \"n\"");
    if (!j.contains("vectors") || !j["vectors"].is_array())
        throw BadConfigFile("missing array field \"vectors\"");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw BadConfigFile("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    int n = j["n"].get<int>();
    std::vector<ExpVec> vectors;
    for (const auto& row : j["vectors"]) {
        if (!row.is_array()) throw BadConfigFile("\"vectors\" must hold arrays");
        ExpVec a;
        for (const auto& e : row) {
            if (!e.is_number_integer())
                throw BadConfigFile("vector entries must be integers");
            a.push_back(e.get<long>());
        }
        vectors.push_back(std::move(a));
    }
    try {
        return validate_configuration(n, std::move(vectors), std::move(name));
    } catch (const NoUnitForm&) {
        throw;
    } catch (const error& e) {
        throw BadConfigFile(e.what());
    }
}

AConfiguration load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadConfigFile("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadConfigFile(std::string("JSON parse error in ") + path + ": " +
                            e.what());
    }
    return config_from_json(j);
}

} // namespace gkz
