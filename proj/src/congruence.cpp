#include "gkzmirror/congruence.hpp"

#include <functional>

namespace gkz {

Int multinomial(const MultiIndex& m) {
    Int out = 1, acc = 0;
    Int bin;
    for (unsigned long e : m.parts) {
        acc += e;
        if (!acc.fits_ulong_p())
            throw error("multinomial total does not fit a machine word");
        mpz_bin_uiui(bin.get_mpz_t(), acc.get_ui(), e);
        out *= bin;
    }
    return out;
}

Int multinomial_by_factorials(const MultiIndex& m) {
    Int num = factorial(m.total());
    for (unsigned long e : m.parts) {
        Int d = factorial(e);
        if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
            throw error("internal: factorial quotient is not integral");
        num /= d;
    }
    return num;
}

Valuation legendre_factorial_valuation(unsigned long e, const Int& p) {
    require_prime(p);
    Int v = 0, q = p;
    while (q <= e) {
        v += Int(e) / q;
        q *= p;
    }
    return Valuation::of(v.get_si());
}

namespace {

Valuation min_part_valuation(const MultiIndex& m, const Int& p) {
    Valuation b = Valuation::infinity();
    for (unsigned long e : m.parts) {
        Valuation v = p_valuation(Int(e), p);
        if (v < b) b = v;
    }
    return b;
}

Json multiindex_json(const MultiIndex& m) {
    Json j = Json::array();
    for (unsigned long e : m.parts) j.push_back(e);
    return j;
}

} // namespace

Report check_divisibility(const MultiIndex& m, const Int& p) {
    require_prime(p);
    Report r;
    r.check = "multinomial-divisibility";
    r.target = "parts " + multiindex_json(m).dump() + ", p=" + p.get_str();

    Valuation a = p_valuation(Int(m.total()), p);
    Valuation b = min_part_valuation(m, p);
    long required = (!a.finite && !b.finite) ? 0 : a.v - b.v;  // all parts 0
    Int coeff = multinomial(m);
    Valuation got = p_valuation(coeff, p);

    r.pass = got.at_least(required);
    r.details["a"] = a.str();
    r.details["b"] = b.str();
    r.details["required"] = required;
    r.details["valuation"] = got.str();
    r.details["multinomial"] = coeff.get_str();
    if (!r.pass)
        r.witness = WitnessTerm{{}, Rat(coeff), "valuation below p^(a-b)"};
    return r;
}

Report check_scaling_difference(const MultiIndex& m, const Int& p) {
    require_prime(p);
    Report r;
    r.check = "multinomial-scaling-difference";
    r.target = "parts " + multiindex_json(m).dump() + ", p=" + p.get_str();

    if (!p.fits_ulong_p()) throw error("prime does not fit a machine word");
    Int diff = multinomial(m.scaled(p.get_ui())) - multinomial(m);
    Valuation a = p_valuation(Int(m.total()), p);
    Valuation got = p_valuation(diff, p);

    // required = a + 1; vacuous when the total is 0 (diff is 0 as well).
    bool pass = a.finite ? got.at_least(a.v + 1) : !got.finite;
    r.pass = pass;
    r.details["a"] = a.str();
    r.details["required"] = a.finite ? std::to_string(a.v + 1) : "inf";
    r.details["valuation"] = got.str();
    r.details["difference"] = diff.get_str();
    if (!pass)
        r.witness = WitnessTerm{{}, Rat(diff), "difference valuation below p^(a+1)"};
    return r;
}

Report scan_congruences(int N_max, unsigned long e_max,
                        const std::vector<Int>& primes) {
    if (N_max < 1) throw error("scan needs N_max >= 1");
    for (const Int& p : primes) require_prime(p);

    Report r;
    r.check = "congruence-scan";
    r.target = "all multi-indices with N <= " + std::to_string(N_max) +
               ", total <= " + std::to_string(e_max);

    long cases = 0, failures = 0;
    std::optional<Report> first_failure;

    std::function<void(MultiIndex&, int, unsigned long)> walk =
        [&](MultiIndex& m, int depth, unsigned long remaining) {
            if (depth == static_cast<int>(m.parts.size())) {
                if (multinomial(m) != multinomial_by_factorials(m))
                    throw error("internal: multinomial routes disagree at " +
                                multiindex_json(m).dump());
                for (const Int& p : primes) {
                    for (Report sub : {check_divisibility(m, p),
                                       check_scaling_difference(m, p)}) {
                        ++cases;
                        if (!sub.pass) {
                            ++failures;
                            if (!first_failure) first_failure = sub;
                        }
                    }
                }
                return;
            }
            for (unsigned long e = 0; e <= remaining; ++e) {
                m.parts[depth] = e;
                walk(m, depth + 1, remaining - e);
            }
            m.parts[depth] = 0;
        };

    for (int N = 1; N <= N_max; ++N) {
        MultiIndex m;
        m.parts.assign(N, 0);
        walk(m, 0, e_max);
    }

    r.pass = failures == 0;
    r.details["cases"] = cases;
    r.details["failures"] = failures;
    if (first_failure) {
        r.details["first_failure"] = first_failure->to_json();
        r.witness = first_failure->witness;
    }
    return r;
}

} // namespace gkz
