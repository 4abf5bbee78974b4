#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkzmirror/corpus.hpp"
#include "gkzmirror/geometry.hpp"
#include "gkzmirror/simplex.hpp"

using namespace gkz;

TEST_CASE("simplex solves small standard-form programs") {
    // min -x1 - 2 x2 s.t. x1 + x2 + s = 4, x1 + 3 x2 + t = 6; optimum at
    // the vertex (3, 1): objective -5.
    LpProblem lp;
    lp.A = {{Rat(1), Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(3), Rat(0), Rat(1)}};
    lp.b = {Rat(4), Rat(6)};
    lp.c = {Rat(-1), Rat(-2), Rat(0), Rat(0)};
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == -5);
    CHECK(sol.x[0] == 3);
    CHECK(sol.x[1] == 1);
}

TEST_CASE("simplex reports infeasibility") {
    // x1 + x2 = -1 with x >= 0.
    LpProblem lp;
    lp.A = {{Rat(1), Rat(1)}};
    lp.b = {Rat(-1)};
    lp.c = {Rat(0), Rat(0)};
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("simplex reports unboundedness") {
    // min -x1 s.t. x1 - x2 = 0.
    LpProblem lp;
    lp.A = {{Rat(1), Rat(-1)}};
    lp.b = {Rat(0)};
    lp.c = {Rat(-1), Rat(0)};
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("simplex handles degenerate ties deterministically") {
    // Two identical rows after reduction; Bland's rule must not cycle.
    LpProblem lp;
    lp.A = {{Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)}};
    lp.b = {Rat(1), Rat(2)};
    lp.c = {Rat(1), Rat(0), Rat(0)};
    LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == 0);
}

TEST_CASE("pointedness certificate for a single ray") {
    auto res = pointedness_certificate({{-2, 1, 1}}, 3);
    REQUIRE(std::holds_alternative<PointednessCertificate>(res));
    const auto& cert = std::get<PointednessCertificate>(res);
    CHECK(cert.margins.size() == 1);
    CHECK(cert.margins[0] >= 1);
    CHECK(dot(cert.w, Relation{-2, 1, 1}) == cert.margins[0]);
}

TEST_CASE("opposite rays produce a verified witness") {
    auto res = pointedness_certificate({{1, -1}, {-1, 1}}, 2);
    REQUIRE(std::holds_alternative<NonPointedWitness>(res));
    const auto& wit = std::get<NonPointedWitness>(res);
    CHECK(wit.coefficients == std::vector<Int>{1, 1});
}

TEST_CASE("empty generator list is vacuously pointed") {
    auto res = pointedness_certificate({}, 3);
    REQUIRE(std::holds_alternative<PointednessCertificate>(res));
    CHECK(std::get<PointednessCertificate>(res).w ==
          std::vector<Rat>{0, 0, 0});
}

TEST_CASE("corpus certificates at generation depth 6") {
    auto corpus = builtin_corpus();
    for (const char* name : {"E2", "E3", "E5"}) {
        auto cfg = builtin_config(name);
        REQUIRE(cfg.has_value());
        std::vector<Relation> gens;
        for (int k = 1; k <= cfg->N; ++k) {
            auto set = enumerate_orthant(*cfg, k, 6);
            gens.insert(gens.end(), set.relations.begin(),
                        set.relations.end());
        }
        auto res = pointedness_certificate(gens, cfg->N);
        REQUIRE_MESSAGE(std::holds_alternative<PointednessCertificate>(res),
                        name);
        for (const Rat& m : std::get<PointednessCertificate>(res).margins)
            CHECK(m >= 1);
    }

    // E1: the enumerated generators span opposite rays.
    auto e1 = builtin_config("E1");
    std::vector<Relation> gens;
    for (int k = 1; k <= e1->N; ++k) {
        auto set = enumerate_orthant(*e1, k, 6);
        gens.insert(gens.end(), set.relations.begin(), set.relations.end());
    }
    auto res = pointedness_certificate(gens, e1->N);
    CHECK(std::holds_alternative<NonPointedWitness>(res));
}

TEST_CASE("duplicate vector detection") {
    auto e1 = builtin_config("E1");
    CHECK(duplicate_pairs(*e1) ==
          std::vector<std::pair<int, int>>{{1, 2}});
    auto e2 = builtin_config("E2");
    CHECK(duplicate_pairs(*e2).empty());
    AConfiguration tri = validate_configuration(2, {{1, 0}, {0, 1}, {1, 0}});
    CHECK(duplicate_pairs(tri) ==
          std::vector<std::pair<int, int>>{{1, 3}});

    Report r = duplicate_vector_check(*e1);
    CHECK(r.details["pointedness_guaranteed"] == false);
}

TEST_CASE("cone grading covers full sublattices") {
    auto e5 = builtin_config("E5");
    ConeGradingInfo info = cone_grading(*e5, {1, 2});
    REQUIRE(info.rate.count(1));
    REQUIRE(info.rate.count(2));
    CHECK(info.rate.at(1) > 0);
    CHECK(info.rate.at(2) > 0);
    // Spot-check the rate inequality w.l >= alpha_k * depth well past the
    // probe depth used to seed the certificate.
    for (int k : {1, 2}) {
        for (const Relation& l : enumerate_orthant(*e5, k, 12).relations) {
            Rat depth(-l[k - 1]);
            CHECK(info.w.level(l) >= info.rate.at(k) * depth);
        }
    }

    auto e1 = builtin_config("E1");
    CHECK_THROWS_AS(cone_grading(*e1, {1, 2}), NotPointed);
}

TEST_CASE("depth bound from a completeness rate") {
    CHECK(depth_for_level(Rat(12), Rat(1)) == 12);
    CHECK(depth_for_level(Rat(12), Rat(1, 2)) == 24);
    CHECK(depth_for_level(Rat(5, 2), Rat(3)) == 0);
    CHECK_THROWS_AS(depth_for_level(Rat(4), Rat(0)), error);
}

TEST_CASE("orthant nontriviality probe") {
    auto e2 = builtin_config("E2");
    CHECK(orthant_nontrivial(*e2, 1));
    CHECK(!orthant_nontrivial(*e2, 2));
    CHECK(!orthant_nontrivial(*e2, 3));
    auto e3 = builtin_config("E3");
    CHECK(!orthant_nontrivial(*e3, 1));
    auto e4 = builtin_config("E4");
    for (int k = 1; k <= 3; ++k) CHECK(orthant_nontrivial(*e4, k));
}
