#pragma once
// Sparse exact polynomials in a fixed ambient variable set. Correlator
// numerators live in (N, alpha); the planar/Hodge layers additionally use
// M = N + alpha, the ratio parameter c, and the Hodge variables lambda, eps.
// Exponents are nonnegative; Laurent behaviour is handled by dedicated types.

#include "lue/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lue {

enum Var : int { VN = 0, VM = 1, VALPHA = 2, VC = 3, VLAMBDA = 4, VEPS = 5 };
constexpr int kNumVars = 6;
const char* var_name(int v);
int var_index(const std::string& name); // -1 if unknown

using Expo = std::array<int16_t, kNumVars>;

struct MultiPoly {
    // invariant: no zero coefficients stored
    std::map<Expo, Rat> terms;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c) { if (!lue::is_zero(c)) terms[Expo{}] = c; }
    explicit MultiPoly(long c) : MultiPoly(Rat(c)) {}

    static MultiPoly var(int v, int pow = 1, const Rat& coeff = Rat(1));

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rat constant_term() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly& operator*=(const Rat& c);
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { a *= c; return a; }
    friend MultiPoly operator*(const Rat& c, MultiPoly a) { a *= c; return a; }
    bool operator==(const MultiPoly& o) const { return terms == o.terms; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned n) const;

    int degree(int v) const;      // -1 for the zero polynomial
    int total_degree() const;
    bool uses_var(int v) const { return degree(v) > 0; }

    // coefficient of v^k, as a polynomial in the remaining variables
    MultiPoly coeff_of(int v, int k) const;

    // all coefficients integral?
    bool is_integral() const;

    Rat eval(const std::array<Rat, kNumVars>& point) const;

    void add_term(const Expo& e, const Rat& c);
};

// substitute variable v by an arbitrary polynomial
MultiPoly poly_substitute(const MultiPoly& p, int v, const MultiPoly& repl);

// parse "2*alpha*(1+2*alpha^2)*N - 3" (integers, + - * ^, parentheses)
MultiPoly poly_parse(const std::string& s);

// canonical display: terms grouped by N-power ascending, per-group scalar and
// alpha-monomial content pulled out, inner factor ascending in alpha.
// `latex` switches alpha -> \alpha and ^{..}.
std::string poly_to_string(const MultiPoly& p, bool latex = false);

// flat monomial dump "c1*mono1 + c2*mono2 + ..." in map order (stable); used
// where the grouped form would be noise (tests, JSON payloads).
std::string poly_to_flat_string(const MultiPoly& p);

} // namespace lue
