/**
 * @file series.hpp
 * @brief Exact sparse arithmetic for cone-supported Laurent series and their
 *        logarithmic extensions.
 *
 * A ConeSeries is a finite map from integer exponent vectors u in Z^N to
 * nonzero rational coefficients, graded by a rational level functional w.
 * Terms with w.u > level_bound are never stored; the bound states the level
 * up to which the coefficients are guaranteed complete, and every operation
 * that can lower that guarantee records the new bound on its output.
 *
 * A LogSeries is a polynomial in the formal symbols log lambda_1..log
 * lambda_N with ConeSeries coefficients, keyed by log-multidegree.
 */
#ifndef GKZMIRROR_SERIES_HPP
#define GKZMIRROR_SERIES_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <vector>

#include "gkzmirror/rational.hpp"

namespace gkz {

// ---- grading -------------------------------------------------------------

// Rational level functional w; level(u) = w . u.
struct Grading {
    std::vector<Rat> w;

    int nvars() const { return static_cast<int>(w.size()); }
    Rat level(const ExpVec& u) const { return dot(w, u); }

    // The spacing of the lattice of possible levels: 1 / lcm(denominators).
    // Every level of an integer exponent is an integer multiple of this.
    Rat quantum() const;

    bool operator==(const Grading& o) const { return w == o.w; }
};

// w = -e_k (k 1-based): the orthant grading under which lambda^l has level
// -l_k for l in L_k.
Grading orthant_grading(int nvars, int k);
Grading zero_grading(int nvars);

// ---- cone series -----------------------------------------------------------

class ConeSeries {
public:
    ConeSeries(Grading g, Rat bound)
        : grading_(std::move(g)), bound_(std::move(bound)) {}

    static ConeSeries constant(const Grading& g, const Rat& bound, const Rat& c);
    static ConeSeries monomial(const Grading& g, const Rat& bound,
                               const ExpVec& u, const Rat& c);

    int nvars() const { return grading_.nvars(); }
    const Grading& grading() const { return grading_; }
    const Rat& bound() const { return bound_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Rat coefficient(const ExpVec& u) const;

    // Accumulates c at exponent u; silently drops exponents beyond the level
    // bound and erases cancellations.
    void add_term(const ExpVec& u, const Rat& c);

    // Smallest level among stored terms (nullopt when zero).
    std::optional<Rat> min_level() const;

    // Copy with the bound lowered to new_bound (must not exceed the current
    // bound); terms beyond it are dropped.
    ConeSeries truncated(const Rat& new_bound) const;

    // Reinterpret the same terms under another grading/bound, dropping terms
    // beyond the new bound. The caller is responsible for the completeness
    // claim the new bound makes.
    ConeSeries regraded(const Grading& g, const Rat& bound) const;

    nlohmann::ordered_json to_json() const;
    static ConeSeries from_json(const nlohmann::json& j);

    friend bool operator==(const ConeSeries& a, const ConeSeries& b) {
        return a.grading_ == b.grading_ && a.bound_ == b.bound_ &&
               a.terms_ == b.terms_;
    }

private:
    Grading grading_;
    Rat bound_;
    std::map<ExpVec, Rat> terms_;
};

ConeSeries add(const ConeSeries& f, const ConeSeries& g);
ConeSeries sub(const ConeSeries& f, const ConeSeries& g);
ConeSeries scale(const ConeSeries& f, const Rat& c);

// Convolution, truncated to the shared bound. Requires both supports at
// nonnegative levels (otherwise truncation would not be stable).
ConeSeries mul(const ConeSeries& f, const ConeSeries& g);

// sum_{m>=0} f^m / m! up to the bound. Requires a vanishing constant term
// and strictly positive levels on the support.
ConeSeries exp_series(const ConeSeries& f);

// Reciprocal of a series with nonzero constant term and positive-level tail.
ConeSeries inverse(const ConeSeries& f);

// f^e for any integer e; negative exponents go through inverse().
ConeSeries pow_int(const ConeSeries& f, long e);

// lambda -> lambda^p: every exponent scaled by p, bound scaled by p.
ConeSeries substitute_power(const ConeSeries& f, long p);

// ---- logarithmic series ----------------------------------------------------

class LogSeries {
public:
    LogSeries(Grading g, Rat bound)
        : grading_(std::move(g)), bound_(std::move(bound)) {}

    static LogSeries from_series(const ConeSeries& s);
    // c * log lambda_j (j 1-based).
    static LogSeries log_monomial(const Grading& g, const Rat& bound, int j,
                                  const Rat& c);

    int nvars() const { return grading_.nvars(); }
    const Grading& grading() const { return grading_; }
    const Rat& bound() const { return bound_; }
    const std::map<ExpVec, ConeSeries>& parts() const { return parts_; }
    bool is_zero() const;
    long log_degree() const;

    // Accumulates a series into the part of log-multidegree alpha. The series
    // is re-truncated to this LogSeries' bound.
    void add_part(const ExpVec& alpha, const ConeSeries& s);

    nlohmann::ordered_json to_json() const;

private:
    Grading grading_;
    Rat bound_;
    std::map<ExpVec, ConeSeries> parts_;
};

LogSeries add(const LogSeries& f, const LogSeries& g);
LogSeries scale(const LogSeries& f, const Rat& c);

// Exact d/d lambda_j (j 1-based) via the Leibniz rule on
// (log lambda)^alpha * lambda^u. The output bound is the input bound minus
// the level of e_j (which restores exactness in either sign).
LogSeries apply_derivation(const LogSeries& f, int j);

// Box operator of the relation l: the positive-part derivative monomial
// minus the negative-part one; output bound is the weaker of the two sides.
LogSeries apply_box(const LogSeries& f, const ExpVec& l);

} // namespace gkz

#endif // GKZMIRROR_SERIES_HPP
