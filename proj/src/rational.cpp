#include "gkzmirror/rational.hpp"

#include <cctype>
#include <sstream>

namespace gkz {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    // 2 = definitely prime, 1 = probably; both count. Deterministic for the
    // word-sized primes this library ever sees.
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

void require_prime(const Int& p) {
    if (!is_prime(p)) throw NotPrime("not a prime: " + p.get_str());
}

Valuation p_valuation(const Int& z, const Int& p) {
    require_prime(p);
    if (z == 0) return Valuation::infinity();
    Int rem;
    mp_bitcnt_t v = mpz_remove(rem.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    return Valuation::of(static_cast<long>(v));
}

Valuation p_valuation(const Rat& c, const Int& p) {
    require_prime(p);
    if (c == 0) return Valuation::infinity();
    Int rem;
    long vn = static_cast<long>(
        mpz_remove(rem.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(rem.get_mpz_t(), c.get_den().get_mpz_t(), p.get_mpz_t()));
    return Valuation::of(vn - vd);
}

std::string rat_str(const Rat& c) {
    return c.get_str();  // GMP prints "num" or "num/den", canonical
}

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
              ch == '+' || ch == '/'))
            throw error("bad rational literal: " + s);
    }
    Rat c;
    if (mpq_set_str(c.get_mpq_t(), s.c_str(), 10) != 0)
        throw error("bad rational literal: " + s);
    if (c.get_den() == 0) throw error("zero denominator: " + s);
    c.canonicalize();
    return c;
}

std::string expvec_str(const ExpVec& u) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < u.size(); ++i) {
        if (i) os << ',';
        os << u[i];
    }
    os << ']';
    return os.str();
}

Rat dot(const std::vector<Rat>& w, const ExpVec& u) {
    Rat s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * static_cast<long>(u[i]);
    return s;
}

Rat dot(const std::vector<Rat>& w, const std::vector<Rat>& x) {
    Rat s = 0;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
    return s;
}

long dot(const ExpVec& a, const ExpVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int rat_floor(const Rat& a) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& a) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    return q;
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace gkz
