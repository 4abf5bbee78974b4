/**
 * @file rational.hpp
 * @brief Exact number types shared by every module: arbitrary-precision
 *        integers and rationals (GMP), p-adic valuations, and the small
 *        vector helpers used for exponents and gradings.
 *
 * No floating point appears anywhere in this library.
 */
#ifndef GKZMIRROR_RATIONAL_HPP
#define GKZMIRROR_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gkzmirror/errors.hpp"

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;

// Integer exponent vector in Z^N; also used for lattice relations and
// log-multidegrees.
using ExpVec = std::vector<long>;

// ---- p-adic valuation -------------------------------------------------

// Valuation value: a finite integer or +infinity (valuation of 0).
struct Valuation {
    bool finite = true;
    long v = 0;

    static Valuation infinity() { return Valuation{false, 0}; }
    static Valuation of(long x) { return Valuation{true, x}; }

    bool at_least(long k) const { return !finite || v >= k; }
    bool at_least(const Valuation& o) const {
        if (!o.finite) return !finite;
        return at_least(o.v);
    }

    bool operator==(const Valuation& o) const {
        return finite == o.finite && (!finite || v == o.v);
    }
    bool operator<(const Valuation& o) const {
        if (!finite) return false;
        if (!o.finite) return true;
        return v < o.v;
    }

    std::string str() const { return finite ? std::to_string(v) : "inf"; }
};

bool is_prime(const Int& p);
void require_prime(const Int& p);

Valuation p_valuation(const Int& z, const Int& p);
Valuation p_valuation(const Rat& c, const Int& p);

// ---- formatting / parsing ----------------------------------------------

// Canonical exact string: "num" when the denominator is 1, else "num/den".
std::string rat_str(const Rat& c);
Rat rat_parse(const std::string& s);

std::string expvec_str(const ExpVec& u);

// ---- exact vector helpers ----------------------------------------------

Rat dot(const std::vector<Rat>& w, const ExpVec& u);
Rat dot(const std::vector<Rat>& w, const std::vector<Rat>& x);
long dot(const ExpVec& a, const ExpVec& b);

Int rat_floor(const Rat& a);
Int rat_ceil(const Rat& a);

Int factorial(unsigned long n);

} // namespace gkz

#endif // GKZMIRROR_RATIONAL_HPP
