// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria are pinned here, including every tolerance (all checks are exact)
// and the runtime budgets.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <vector>

#include "gkzmirror/congruence.hpp"
#include "gkzmirror/corpus.hpp"
#include "gkzmirror/geometry.hpp"
#include "gkzmirror/integrality.hpp"
#include "gkzmirror/solutions.hpp"

using namespace gkz;

namespace {

int failures = 0;

void verdict(int criterion, bool pass, const std::string& what,
             double seconds) {
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
         << what << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const std::string& what, double budget_seconds,
               F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = e.what();
        pass = false;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (secs > budget_seconds) {
        pass = false;
        note += " [exceeded " + std::to_string(budget_seconds) + " s budget]";
    }
    verdict(number, pass, what + (note.empty() ? "" : " — " + note), secs);
}

const std::vector<std::pair<std::string, int>> kTheoremPairs = {
    {"E1", 2}, {"E2", 1}, {"E4", 3}, {"E5", 1}, {"E5", 2}};

const std::vector<Int> kPrimes = {2, 3, 5, 7, 11, 13};

Int catalan(long t) {
    Int bin;
    mpz_bin_uiui(bin.get_mpz_t(), 2 * t, t);
    return bin / (t + 1);
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(GKZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw error("cannot run CLI");
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    if (rc != 0) throw error("CLI exited with " + std::to_string(rc));
    return out;
}

} // namespace

int main() {
    // 1. exp G_k has integer coefficients through level 30 on the corpus
    //    pairs with nontrivial G_k. Tolerance: exact.
    criterion(1, "exp G_k integral to level 30 on all corpus pairs", 10.0,
              [] {
                  bool ok = true;
                  for (const auto& [name, k] : kTheoremPairs) {
                      auto cfg = builtin_config(name);
                      GkSeries g = build_gk(*cfg, k, 30);
                      if (g.series.is_zero()) return false;
                      ok = ok && exp_integrality(g, 30).pass;
                  }
                  return ok;
              });

    // 2. Every coefficient of p G_k(lambda) - G_k(lambda^p) up to level 20
    //    has v_p >= 1, for primes {2,3,5,7,11,13}. Exact.
    criterion(2, "per-prime criterion to level 20, primes 2..13", 30.0, [] {
        bool ok = true;
        for (const auto& [name, k] : kTheoremPairs) {
            auto cfg = builtin_config(name);
            GkSeries g = build_gk(*cfg, k, 20);
            for (const Int& p : kPrimes)
                ok = ok && dwork_criterion(g, p, 20).pass;
        }
        return ok;
    });

    // 3. The series route and the multinomial-congruence route agree (and
    //    both pass) on every pair from criterion 2.
    criterion(3, "series and congruence routes agree on all pairs", 30.0, [] {
        bool ok = true;
        for (const auto& [name, k] : kTheoremPairs) {
            auto cfg = builtin_config(name);
            GkSeries g = build_gk(*cfg, k, 20);
            bool series_route = true;
            for (const Int& p : kPrimes)
                series_route = series_route && dwork_criterion(g, p, 20).pass;
            bool direct = dwork_congruences(*cfg, k, 20, kPrimes).pass;
            ok = ok && series_route && direct && (series_route == direct);
        }
        return ok;
    });

    // 4. Exhaustive multinomial congruence scan, N <= 4, total <= 12,
    //    p in {2,3,5,7}; the scan also compares the two multinomial routes
    //    on every case. Zero failures.
    criterion(4, "exhaustive congruence scan N<=4, e<=12, p in {2,3,5,7}",
              60.0, [] {
                  Report r = scan_congruences(4, 12, {2, 3, 5, 7});
                  return r.pass && r.details["failures"] == 0;
              });

    // 5. Euler operators annihilate every corpus G_k termwise; box
    //    operators annihilate log lambda_k + G_k and the kernel-basis
    //    solutions up to the guaranteed level, relation slab |l_j| <= 3.
    //    Duplicate-vector configurations must reject the combined series
    //    with NotPointed instead.
    criterion(5, "Euler/box annihilation across the corpus, slab 3", 30.0, [] {
        bool ok = true;
        for (const AConfiguration& cfg : builtin_corpus()) {
            auto rels = box_check_relations(cfg, 3);
            std::vector<GkSeries> gks;
            for (int k = 1; k <= cfg.N; ++k)
                gks.push_back(build_gk(cfg, k, 12));
            for (const GkSeries& g : gks) {
                ok = ok && check_euler(cfg, g.series).pass;
                ok = ok && check_box(cfg, log_lambda_plus_gk(g), rels).pass;
            }
            bool has_duplicates = !duplicate_pairs(cfg).empty();
            for (const Relation& lt : kernel_basis(cfg)) {
                try {
                    LogSeries sol = log_solution(cfg, lt, gks);
                    ok = ok && check_euler(cfg, sol).pass;
                    ok = ok && check_box(cfg, sol, rels).pass;
                } catch (const NotPointed&) {
                    // Expected exactly for duplicate-vector configurations.
                    ok = ok && has_duplicates;
                }
            }
        }
        return ok;
    });

    // 6. Closed forms: E1 exp G_2 = 1 + lambda_1/lambda_2 exactly through
    //    level 30; E2 exp G_1 = 1 - sum_t C_{t-1} x^t for 12 ray levels;
    //    E2 mirror series for (-2,1,1) = C(x)^2, i.e. q = C(x) - 1.
    criterion(6, "closed-form oracles (unit exp, Catalan exp, Catalan mirror)",
              30.0, [] {
                  bool ok = true;

                  auto e1 = builtin_config("E1");
                  ConeSeries e = exp_series(build_gk(*e1, 2, 30).series);
                  ok = ok && e.term_count() == 2;
                  ok = ok && e.coefficient(ExpVec{0, 0}) == 1 &&
                       e.coefficient(ExpVec{1, -1}) == 1;

                  auto e2 = builtin_config("E2");
                  ConeSeries ee = exp_series(build_gk(*e2, 1, 24).series);
                  for (long t = 1; t <= 12; ++t)
                      ok = ok && ee.coefficient(ExpVec{-2 * t, t, t}) ==
                                     -catalan(t - 1);

                  auto [mir, rep] = mirror_map(*e2, {-2, 1, 1}, 24);
                  ok = ok && rep.pass;
                  for (long t = 1; t <= 12; ++t)
                      ok = ok && mir.coefficient(
                                     ExpVec{-2 * (t - 1), t - 1, t - 1}) ==
                                     catalan(t);
                  return ok;
              });

    // 7. Pointedness machinery: certificates with exactly verified margins
    //    for E2, E3, E5 at generation level 6; a verified witness for E1;
    //    duplicate flags on E1 and E4.
    criterion(7, "pointedness certificates, witness, duplicate flags", 10.0,
              [] {
                  bool ok = true;
                  auto gens_of = [](const AConfiguration& cfg) {
                      std::vector<Relation> gens;
                      for (int k = 1; k <= cfg.N; ++k) {
                          auto set = enumerate_orthant(cfg, k, 6);
                          gens.insert(gens.end(), set.relations.begin(),
                                      set.relations.end());
                      }
                      return gens;
                  };
                  for (const char* name : {"E2", "E3", "E5"}) {
                      auto cfg = builtin_config(name);
                      auto res = pointedness_certificate(gens_of(*cfg), cfg->N);
                      bool pointed =
                          std::holds_alternative<PointednessCertificate>(res);
                      ok = ok && pointed;
                      if (pointed) {
                          const auto& cert =
                              std::get<PointednessCertificate>(res);
                          for (size_t i = 0; i < cert.generators.size(); ++i)
                              ok = ok &&
                                   dot(cert.w, cert.generators[i]) ==
                                       cert.margins[i] &&
                                   cert.margins[i] >= 1;
                      }
                  }
                  auto e1 = builtin_config("E1");
                  auto res = pointedness_certificate(gens_of(*e1), e1->N);
                  ok = ok && std::holds_alternative<NonPointedWitness>(res);
                  if (ok) {
                      const auto& wit = std::get<NonPointedWitness>(res);
                      std::vector<Int> sum(e1->N, 0);
                      bool positive = false;
                      for (size_t g = 0; g < wit.generators.size(); ++g) {
                          if (wit.coefficients[g] < 0) ok = false;
                          if (wit.coefficients[g] > 0) positive = true;
                          for (int i = 0; i < e1->N; ++i)
                              sum[i] += wit.coefficients[g] *
                                        wit.generators[g][i];
                      }
                      ok = ok && positive;
                      for (const Int& s : sum) ok = ok && s == 0;
                  }
                  ok = ok && !duplicate_pairs(*builtin_config("E1")).empty();
                  ok = ok && !duplicate_pairs(*builtin_config("E4")).empty();
                  ok = ok && duplicate_pairs(*builtin_config("E2")).empty();
                  return ok;
              });

    // 8. Two consecutive report-all runs over E2 emit byte-identical JSON.
    criterion(8, "byte-identical repeated report-all JSON on E2", 60.0, [] {
        std::string args =
            "report-all --config E2 --max-level 20 --primes 2,3,5 "
            "--format json";
        std::string first = run_cli(args);
        std::string second = run_cli(args);
        return !first.empty() && first == second;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
