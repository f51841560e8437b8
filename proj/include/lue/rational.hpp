#pragma once
// Exact scalar layer. We use GMP's C++ wrappers as the backing store:
// mpz_class for integers, mpq_class for rationals (always canonicalized,
// denominator > 0). Everything downstream assumes these invariants.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lue {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Int& z) { return sgn(z) == 0; }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" or just "p"; used verbatim in CLI/JSON output.
inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial_ll(long n, long k) {
    if (k < 0) return 0;
    return binomial(Int(n), (unsigned long)k);
}

// Rising factorial (p)_j = p(p+1)...(p+j-1), exact over the rationals.
inline Rat pochhammer(const Rat& p, unsigned long j) {
    Rat acc = 1;
    Rat f = p;
    for (unsigned long i = 0; i < j; ++i) { acc *= f; f += 1; }
    return acc;
}

inline Int pochhammer_int(const Int& p, unsigned long j) {
    Int acc = 1;
    Int f = p;
    for (unsigned long i = 0; i < j; ++i) { acc *= f; f += 1; }
    return acc;
}

// Exact division, asserting divisibility (used where recursions promise it).
inline Int divexact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("divexact: not divisible");
    return q;
}

} // namespace lue
