#include "gkzmirror/series.hpp"

#include <algorithm>

#include "gkzmirror/errors.hpp"

namespace gkz {

// ---- grading -------------------------------------------------------------

Rat Grading::quantum() const {
    Int lcm = 1;
    for (const Rat& c : w)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Rat q(Int(1), lcm);
    q.canonicalize();
    return q;
}

Grading orthant_grading(int nvars, int k) {
    Grading g;
    g.w.assign(nvars, Rat(0));
    g.w[k - 1] = -1;
    return g;
}

Grading zero_grading(int nvars) {
    Grading g;
    g.w.assign(nvars, Rat(0));
    return g;
}

// ---- cone series -----------------------------------------------------------

namespace {

void require_compatible(const ConeSeries& a, const ConeSeries& b) {
    if (a.nvars() != b.nvars())
        throw GradingMismatch("operands have different variable counts");
    if (!(a.grading() == b.grading()))
        throw GradingMismatch("operands have different gradings");
    if (a.bound() != b.bound())
        throw GradingMismatch("operands have different level bounds");
}

void require_nonnegative_levels(const ConeSeries& f, const char* op) {
    auto m = f.min_level();
    if (m && *m < 0)
        throw error(std::string(op) +
                    ": operand has support at negative levels");
}

} // namespace

ConeSeries ConeSeries::constant(const Grading& g, const Rat& bound,
                                const Rat& c) {
    ConeSeries s(g, bound);
    s.add_term(ExpVec(g.nvars(), 0), c);
    return s;
}

ConeSeries ConeSeries::monomial(const Grading& g, const Rat& bound,
                                const ExpVec& u, const Rat& c) {
    ConeSeries s(g, bound);
    s.add_term(u, c);
    return s;
}

Rat ConeSeries::coefficient(const ExpVec& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ConeSeries::add_term(const ExpVec& u, const Rat& c) {
    if (static_cast<int>(u.size()) != nvars())
        throw GradingMismatch("exponent length does not match variable count");
    if (c == 0) return;
    if (grading_.level(u) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<Rat> ConeSeries::min_level() const {
    std::optional<Rat> m;
    for (const auto& [u, c] : terms_) {
        Rat lv = grading_.level(u);
        if (!m || lv < *m) m = lv;
    }
    return m;
}

ConeSeries ConeSeries::truncated(const Rat& new_bound) const {
    if (new_bound > bound_)
        throw GradingMismatch("cannot raise a truncation bound");
    ConeSeries out(grading_, new_bound);
    for (const auto& [u, c] : terms_) out.add_term(u, c);
    return out;
}

ConeSeries ConeSeries::regraded(const Grading& g, const Rat& bound) const {
    if (g.nvars() != nvars())
        throw GradingMismatch("regrade must preserve the variable count");
    ConeSeries out(g, bound);
    for (const auto& [u, c] : terms_) out.add_term(u, c);
    return out;
}

ConeSeries add(const ConeSeries& f, const ConeSeries& g) {
    require_compatible(f, g);
    ConeSeries out = f;
    for (const auto& [u, c] : g.terms()) out.add_term(u, c);
    return out;
}

ConeSeries sub(const ConeSeries& f, const ConeSeries& g) {
    return add(f, scale(g, Rat(-1)));
}

ConeSeries scale(const ConeSeries& f, const Rat& c) {
    ConeSeries out(f.grading(), f.bound());
    if (c == 0) return out;
    for (const auto& [u, k] : f.terms()) out.add_term(u, k * c);
    return out;
}

ConeSeries mul(const ConeSeries& f, const ConeSeries& g) {
    require_compatible(f, g);
    require_nonnegative_levels(f, "mul");
    require_nonnegative_levels(g, "mul");
    ConeSeries out(f.grading(), f.bound());
    ExpVec u(f.nvars());
    for (const auto& [uf, cf] : f.terms()) {
        for (const auto& [ug, cg] : g.terms()) {
            for (int i = 0; i < f.nvars(); ++i) u[i] = uf[i] + ug[i];
            out.add_term(u, cf * cg);
        }
    }
    return out;
}

ConeSeries exp_series(const ConeSeries& f) {
    if (f.coefficient(ExpVec(f.nvars(), 0)) != 0)
        throw NonzeroConstantTerm("exp_series input has a constant term");
    auto m = f.min_level();
    if (m && *m <= 0)
        throw error("exp_series: support must sit at strictly positive levels");

    ConeSeries acc = ConeSeries::constant(f.grading(), f.bound(), 1);
    ConeSeries power = acc;
    Rat inv_mfact = 1;
    for (long k = 1; !power.is_zero(); ++k) {
        power = mul(power, f);
        if (power.is_zero()) break;
        inv_mfact /= k;
        acc = add(acc, scale(power, inv_mfact));
    }
    return acc;
}

ConeSeries inverse(const ConeSeries& f) {
    Rat c0 = f.coefficient(ExpVec(f.nvars(), 0));
    if (c0 == 0) throw error("inverse: series has no constant term");
    // f = c0 (1 + h); 1/f = (1/c0) sum (-h)^m.
    ConeSeries h = scale(f, 1 / c0);
    h.add_term(ExpVec(f.nvars(), 0), Rat(-1));
    auto m = h.min_level();
    if (m && *m <= 0)
        throw error("inverse: tail must sit at strictly positive levels");
    ConeSeries acc = ConeSeries::constant(f.grading(), f.bound(), 1);
    ConeSeries power = acc;
    long sign = 1;
    while (true) {
        power = mul(power, h);
        if (power.is_zero()) break;
        sign = -sign;
        acc = add(acc, scale(power, Rat(sign)));
    }
    return scale(acc, 1 / c0);
}

ConeSeries pow_int(const ConeSeries& f, long e) {
    if (e < 0) return pow_int(inverse(f), -e);
    ConeSeries acc = ConeSeries::constant(f.grading(), f.bound(), 1);
    ConeSeries base = f;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

ConeSeries substitute_power(const ConeSeries& f, long p) {
    if (p < 2) throw error("substitute_power needs p >= 2");
    ConeSeries out(f.grading(), f.bound() * p);
    ExpVec pu(f.nvars());
    for (const auto& [u, c] : f.terms()) {
        for (int i = 0; i < f.nvars(); ++i) pu[i] = p * u[i];
        out.add_term(pu, c);
    }
    return out;
}

nlohmann::ordered_json ConeSeries::to_json() const {
    nlohmann::ordered_json j;
    j["grading"] = nlohmann::ordered_json::array();
    for (const Rat& c : grading_.w) j["grading"].push_back(rat_str(c));
    j["bound"] = rat_str(bound_);
    j["terms"] = nlohmann::ordered_json::array();
    // Emitted by (level, lex) so listings read off in truncation order.
    std::vector<const std::pair<const ExpVec, Rat>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [this](const auto* a, const auto* b) {
                         Rat la = grading_.level(a->first);
                         Rat lb = grading_.level(b->first);
                         if (la != lb) return la < lb;
                         return a->first < b->first;
                     });
    for (const auto* t : order) {
        nlohmann::ordered_json e;
        e["u"] = t->first;
        e["c"] = rat_str(t->second);
        j["terms"].push_back(e);
    }
    return j;
}

ConeSeries ConeSeries::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("grading") || !j.contains("bound") ||
        !j.contains("terms"))
        throw error("series JSON needs grading/bound/terms");
    Grading g;
    for (const auto& e : j["grading"]) g.w.push_back(rat_parse(e.get<std::string>()));
    ConeSeries s(g, rat_parse(j["bound"].get<std::string>()));
    for (const auto& t : j["terms"]) {
        ExpVec u = t["u"].get<ExpVec>();
        s.add_term(u, rat_parse(t["c"].get<std::string>()));
    }
    return s;
}

// ---- logarithmic series ----------------------------------------------------

LogSeries LogSeries::from_series(const ConeSeries& s) {
    LogSeries out(s.grading(), s.bound());
    out.add_part(ExpVec(s.nvars(), 0), s);
    return out;
}

LogSeries LogSeries::log_monomial(const Grading& g, const Rat& bound, int j,
                                  const Rat& c) {
    LogSeries out(g, bound);
    ExpVec alpha(g.nvars(), 0);
    alpha[j - 1] = 1;
    out.add_part(alpha, ConeSeries::constant(g, bound, c));
    return out;
}

bool LogSeries::is_zero() const {
    for (const auto& [a, s] : parts_)
        if (!s.is_zero()) return false;
    return true;
}

long LogSeries::log_degree() const {
    long d = 0;
    for (const auto& [a, s] : parts_) {
        if (s.is_zero()) continue;
        long da = 0;
        for (long e : a) da += e;
        d = std::max(d, da);
    }
    return d;
}

void LogSeries::add_part(const ExpVec& alpha, const ConeSeries& s) {
    if (static_cast<int>(alpha.size()) != nvars())
        throw GradingMismatch("log-multidegree length mismatch");
    for (long e : alpha)
        if (e < 0) throw error("log-multidegree must be nonnegative");
    if (!(s.grading() == grading_))
        throw GradingMismatch("part grading differs from the log series");
    auto it = parts_.find(alpha);
    if (it == parts_.end()) {
        ConeSeries fitted(grading_, bound_);
        for (const auto& [u, c] : s.terms()) fitted.add_term(u, c);
        parts_.emplace(alpha, std::move(fitted));
    } else {
        for (const auto& [u, c] : s.terms()) it->second.add_term(u, c);
    }
    // Drop exhausted parts so is_zero() stays structural.
    it = parts_.find(alpha);
    if (it != parts_.end() && it->second.is_zero()) parts_.erase(it);
}

LogSeries add(const LogSeries& f, const LogSeries& g) {
    if (!(f.grading() == g.grading()))
        throw GradingMismatch("log series gradings differ");
    Rat bound = std::min(f.bound(), g.bound());
    LogSeries out(f.grading(), bound);
    for (const auto& [a, s] : f.parts()) out.add_part(a, s);
    for (const auto& [a, s] : g.parts()) out.add_part(a, s);
    return out;
}

LogSeries scale(const LogSeries& f, const Rat& c) {
    LogSeries out(f.grading(), f.bound());
    if (c == 0) return out;
    for (const auto& [a, s] : f.parts()) out.add_part(a, scale(s, c));
    return out;
}

LogSeries apply_derivation(const LogSeries& f, int j) {
    if (j < 1 || j > f.nvars()) throw error("derivation index out of range");
    const int j0 = j - 1;
    const Rat wj = f.grading().w[j0];
    LogSeries out(f.grading(), f.bound() - wj);

    for (const auto& [alpha, s] : f.parts()) {
        ConeSeries keep(f.grading(), out.bound());   // same log degree
        ConeSeries lower(f.grading(), out.bound());  // log degree drops at j
        ExpVec shifted(f.nvars());
        for (const auto& [u, c] : s.terms()) {
            shifted = u;
            shifted[j0] -= 1;
            if (u[j0] != 0) keep.add_term(shifted, c * u[j0]);
            if (alpha[j0] != 0) lower.add_term(shifted, c * alpha[j0]);
        }
        if (!keep.is_zero()) out.add_part(alpha, keep);
        if (!lower.is_zero()) {
            ExpVec alpha_lower = alpha;
            alpha_lower[j0] -= 1;
            out.add_part(alpha_lower, lower);
        }
    }
    return out;
}

LogSeries apply_box(const LogSeries& f, const ExpVec& l) {
    if (static_cast<int>(l.size()) != f.nvars())
        throw GradingMismatch("relation length mismatch");
    LogSeries plus = f, minus = f;
    for (int j = 1; j <= f.nvars(); ++j) {
        for (long t = 0; t < l[j - 1]; ++t) plus = apply_derivation(plus, j);
        for (long t = 0; t < -l[j - 1]; ++t) minus = apply_derivation(minus, j);
    }
    Rat bound = std::min(plus.bound(), minus.bound());
    LogSeries out(f.grading(), bound);
    for (const auto& [a, s] : plus.parts()) out.add_part(a, s);
    for (const auto& [a, s] : minus.parts()) out.add_part(a, scale(s, Rat(-1)));
    return out;
}

nlohmann::ordered_json LogSeries::to_json() const {
    nlohmann::ordered_json j;
    j["grading"] = nlohmann::ordered_json::array();
    for (const Rat& c : grading_.w) j["grading"].push_back(rat_str(c));
    j["bound"] = rat_str(bound_);
    j["parts"] = nlohmann::ordered_json::array();
    for (const auto& [a, s] : parts_) {
        nlohmann::ordered_json e;
        e["log"] = a;
        e["series"] = s.to_json();
        j["parts"].push_back(e);
    }
    return j;
}

} // namespace gkz
