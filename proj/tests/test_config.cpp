#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "gkzmirror/config.hpp"
#include "gkzmirror/corpus.hpp"

using namespace gkz;

namespace {

// Independent brute-force oracle: scan every nonnegative tuple over the
// coordinates j != k with total weight <= m_max and keep the relations.
std::vector<Relation> orthant_oracle(const AConfiguration& cfg, int k,
                                     long m_max) {
    const int k0 = k - 1;
    std::vector<int> idx;
    for (int j = 0; j < cfg.N; ++j)
        if (j != k0) idx.push_back(j);

    std::vector<Relation> out;
    std::vector<long> v(idx.size(), 0);
    while (true) {
        long total = std::accumulate(v.begin(), v.end(), 0L);
        if (total >= 1 && total <= m_max) {
            Relation l(cfg.N, 0);
            for (size_t f = 0; f < idx.size(); ++f) l[idx[f]] = v[f];
            l[k0] = -total;
            if (is_relation(cfg, l)) out.push_back(l);
        }
        size_t pos = 0;
        while (pos < v.size() && v[pos] == m_max) v[pos++] = 0;
        if (pos == v.size()) break;
        ++v[pos];
    }
    std::sort(out.begin(), out.end(), [k0](const Relation& a, const Relation& b) {
        if (-a[k0] != -b[k0]) return -a[k0] < -b[k0];
        return a < b;
    });
    return out;
}

// Exact rational solve of B^T x = l for the coordinates of l in the kernel
// basis; returns the solution when it exists.
std::optional<std::vector<Rat>> solve_in_basis(
    const std::vector<Relation>& basis, const Relation& l) {
    const int N = static_cast<int>(l.size());
    const int r = static_cast<int>(basis.size());
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(r + 1, 0));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < r; ++j) m[i][j] = basis[j][i];
        m[i][r] = l[i];
    }
    int row = 0;
    std::vector<int> pivot(r, -1);
    for (int c = 0; c < r && row < N; ++c) {
        int pr = -1;
        for (int i = row; i < N; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rat inv = 1 / m[row][c];
        for (int j = c; j <= r; ++j) m[row][j] *= inv;
        for (int i = 0; i < N; ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j <= r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot[c] = row;
        ++row;
    }
    std::vector<Rat> x(r, 0);
    for (int c = 0; c < r; ++c)
        if (pivot[c] >= 0) x[c] = m[pivot[c]][r];
    // Consistency: rows with zero lhs must have zero rhs.
    for (int i = 0; i < N; ++i) {
        bool zero = true;
        for (int j = 0; j < r; ++j)
            if (m[i][j] != 0) zero = false;
        if (zero && m[i][r] != 0) return std::nullopt;
    }
    return x;
}

AConfiguration e2() {
    return validate_configuration(2, {{1, 0}, {0, 1}, {2, -1}});
}

} // namespace

TEST_CASE("unit form is computed and verified") {
    AConfiguration cfg = e2();
    REQUIRE(cfg.unit_form.size() == 2);
    CHECK(cfg.unit_form[0] == 1);
    CHECK(cfg.unit_form[1] == 1);

    AConfiguration line = validate_configuration(1, {{1}, {1}});
    CHECK(line.unit_form[0] == 1);

    CHECK_THROWS_AS(validate_configuration(1, {{1}, {2}}), NoUnitForm);
}

TEST_CASE("unit form for the built-in corpus") {
    for (const AConfiguration& cfg : builtin_corpus()) {
        for (int j = 0; j < cfg.N; ++j)
            CHECK(dot(cfg.unit_form, cfg.vectors[j]) == 1);
    }
}

TEST_CASE("malformed configurations are rejected") {
    CHECK_THROWS_AS(validate_configuration(2, {}), error);
    CHECK_THROWS_AS(validate_configuration(2, {{1, 0}, {1}}), error);
    CHECK_THROWS_AS(validate_configuration(0, {{}}), error);
}

TEST_CASE("kernel basis on the corpus") {
    auto corpus = builtin_corpus();
    CHECK(kernel_basis(corpus[0]) == std::vector<Relation>{{1, -1}});
    CHECK(kernel_basis(corpus[1]) == std::vector<Relation>{{-2, 1, 1}});
    CHECK(kernel_basis(corpus[2]).empty());
    CHECK(kernel_basis(corpus[4]) ==
          std::vector<Relation>{{-2, 1, 1, 0}, {1, -2, 0, 1}});
}

TEST_CASE("kernel basis elements are primitive relations with zero sum") {
    std::mt19937 rng(20260811);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int N = 1 + static_cast<int>(rng() % 5);
        std::vector<ExpVec> vecs;
        for (int j = 0; j < N; ++j) {
            ExpVec a(n, 0);
            for (int i = 0; i + 1 < n; ++i) a[i] = entry(rng);
            a[n - 1] = 1;  // guarantees the unit form h = e_n
            vecs.push_back(a);
        }
        AConfiguration cfg = validate_configuration(n, vecs);
        for (const Relation& l : kernel_basis(cfg)) {
            CHECK(is_relation(cfg, l));
            CHECK(std::accumulate(l.begin(), l.end(), 0L) == 0);
            long g = 0;
            for (long e : l) g = std::gcd(g, e);
            CHECK(g == 1);
        }
    }
}

TEST_CASE("orthant enumeration matches the spec examples") {
    AConfiguration cfg = e2();
    OrthantRelationSet s = enumerate_orthant(cfg, 1, 4);
    CHECK(s.complete);
    CHECK(s.relations == std::vector<Relation>{{-2, 1, 1}, {-4, 2, 2}});

    CHECK(enumerate_orthant(cfg, 2, 10).relations.empty());
    CHECK(enumerate_orthant(cfg, 3, 10).relations.empty());

    AConfiguration indep = validate_configuration(2, {{1, 0}, {0, 1}});
    CHECK(enumerate_orthant(indep, 1, 8).relations.empty());
    CHECK(enumerate_orthant(indep, 2, 8).relations.empty());
}

TEST_CASE("orthant enumeration agrees with the brute-force oracle") {
    for (const AConfiguration& cfg : builtin_corpus()) {
        for (int k = 1; k <= cfg.N; ++k) {
            auto got = enumerate_orthant(cfg, k, 6).relations;
            auto expected = orthant_oracle(cfg, k, 6);
            CHECK(got == expected);
        }
    }

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 2);
        int N = 2 + static_cast<int>(rng() % 3);
        std::vector<ExpVec> vecs;
        for (int j = 0; j < N; ++j) {
            ExpVec a(n, 0);
            for (int i = 0; i + 1 < n; ++i) a[i] = entry(rng);
            a[n - 1] = 1;
            vecs.push_back(a);
        }
        AConfiguration cfg = validate_configuration(n, vecs);
        for (int k = 1; k <= cfg.N; ++k) {
            auto got = enumerate_orthant(cfg, k, 5).relations;
            auto expected = orthant_oracle(cfg, k, 5);
            CHECK(got == expected);
        }
    }
}

TEST_CASE("enumerated orthant relations lie in the kernel span") {
    for (const AConfiguration& cfg : builtin_corpus()) {
        auto basis = kernel_basis(cfg);
        for (int k = 1; k <= cfg.N; ++k) {
            for (const Relation& l : enumerate_orthant(cfg, k, 6).relations) {
                auto x = solve_in_basis(basis, l);
                REQUIRE(x.has_value());
                for (const Rat& c : *x) CHECK(c.get_den() == 1);
            }
        }
    }
}

TEST_CASE("enumeration budget cap raises") {
    AConfiguration cfg = e2();
    CHECK_THROWS_AS(enumerate_orthant(cfg, 1, 30, /*node_cap=*/3),
                    BudgetExceeded);
}

TEST_CASE("relation slab") {
    AConfiguration cfg = e2();
    CHECK(relation_slab(cfg, 3) ==
          std::vector<Relation>{{-2, 1, 1}, {2, -1, -1}});
    AConfiguration line = validate_configuration(1, {{1}, {1}});
    CHECK(relation_slab(line, 2) ==
          std::vector<Relation>{{-2, 2}, {-1, 1}, {1, -1}, {2, -2}});
}

TEST_CASE("configuration JSON schema") {
    nlohmann::json good = {
        {"name", "demo"}, {"n", 2}, {"vectors", {{1, 0}, {0, 1}, {2, -1}}}};
    AConfiguration cfg = config_from_json(good);
    CHECK(cfg.name == "demo");
    CHECK(cfg.N == 3);
    CHECK(cfg.unit_form == std::vector<Rat>{1, 1});

    nlohmann::json unknown = good;
    unknown["extra"] = 1;
    CHECK_THROWS_AS(config_from_json(unknown), BadConfigFile);

    nlohmann::json ragged = {{"n", 2}, {"vectors", {{1, 0}, {1}}}};
    CHECK_THROWS_AS(config_from_json(ragged), BadConfigFile);

    nlohmann::json fractional = {{"n", 1}, {"vectors", {{0.5}}}};
    CHECK_THROWS_AS(config_from_json(fractional), BadConfigFile);

    CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), BadConfigFile);
}
