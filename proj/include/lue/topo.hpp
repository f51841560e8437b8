#pragma once
// Topological expansion of the correlators under alpha = (c-1) N and the
// weighted monotone Hurwitz numbers read off from it.
//
// Strict side: N^{len-|mu|-2} < prod tr X^{mu_i} >_c is a polynomial in N^-2
// whose N^{-2g} coefficient is a polynomial in c with zero constant term;
// H_g^>(mu; s) is its c^s coefficient.
//
// Weak side: N^{len+|mu|-2} < prod tr X^{-mu_i} >_c expands in N^-2 with
// N^{-2g} coefficient sum_s H_g^>=(mu; s) w^{-(2g-2+|mu|+len+s)}, w = c-1.
// The a_j blocks are expanded through the grouped variable u = 1/(N w):
// 1/a_j = u^{2j+1} prod_{m=1}^{j} (1 - m^2 u^2)^{-1}.

#include "lue/oracles.hpp"
#include "lue/resolvent.hpp"

#include <map>
#include <string>
#include <vector>

namespace lue {

// Laurent polynomial in w = c - 1
struct WLaur {
    std::map<int, Rat> c; // w-power -> coefficient

    WLaur() = default;
    explicit WLaur(const Rat& r) {
        if (!lue::is_zero(r)) c[0] = r;
    }
    static WLaur mono(int p, const Rat& v) {
        WLaur x;
        if (!lue::is_zero(v)) x.c[p] = v;
        return x;
    }

    bool is_zero() const { return c.empty(); }
    int lo() const { return c.empty() ? 0 : c.begin()->first; }
    int hi() const { return c.empty() ? 0 : c.rbegin()->first; }

    void add(int p, const Rat& v);
    Rat coeff(int p) const {
        auto it = c.find(p);
        return it == c.end() ? Rat(0) : it->second;
    }

    WLaur& operator+=(const WLaur& o);
    friend WLaur operator+(WLaur a, const WLaur& b) { a += b; return a; }
    friend WLaur operator-(const WLaur& a, const WLaur& b) { return a + (-b); }
    WLaur operator-() const;
    friend WLaur operator*(const WLaur& a, const WLaur& b);
    WLaur& operator*=(const Rat& s);

    bool operator==(const WLaur& o) const { return c == o.c; }

    bool all_integer() const;
    Rat eval(const Rat& w) const;
    // polynomial part only (throws if negative powers present); index = c-power
    std::vector<Rat> to_c_poly() const;
    std::string to_string() const; // in terms of (c-1)
};

// Correlator with alpha = (c-1) N substituted, organized by power of N:
// rows[e] = w-Laurent coefficient of N^e. When the denominator is nonempty
// the alpha-blocks make the expansion an infinite Laurent series in 1/N and
// only rows with e >= floor are kept (exact = false).
struct ScaledExpansion {
    std::map<int, WLaur> rows;
    int floor = 0;
    bool exact = false; // true when the full (finite) expansion is stored

    const WLaur& row(int e) const; // zero object if absent; throws below floor
};

ScaledExpansion scaled_correlator(const std::vector<int>& key, int floor,
                                  const EngineOptions& opt = {});

struct HurwitzTable {
    MonotoneFlavor flavor = MonotoneFlavor::Strict;
    std::vector<int> mu;  // descending
    int smax = 0;         // columns s = 1..smax
    // entries[g][s-1] = H_g(mu; s)
    std::vector<std::vector<Int>> entries;

    Int at(int g, int s) const;
};

// strict table for g = 0..gmax, s = 1..|mu|-len+1; asserts the structure
// (even nonpositive powers of N, polynomial in c with zero constant term,
// degree bound, integrality) and throws std::logic_error on violation
HurwitzTable expand_strict(const std::vector<int>& mu, int gmax,
                           const EngineOptions& opt = {});

// weak table for g = 0..gmax, s = 1..smax (default |mu|); asserts the
// structure (even powers, w-support window, integrality, nonnegativity) and
// re-runs at a deeper truncation to confirm the extracted rows are stable
HurwitzTable expand_weak(const std::vector<int>& mu, int gmax, int smax = -1,
                         const EngineOptions& opt = {});

// H_g^>(mu;s) = H_g^>(mu; 2-2g+|mu|-len-s) for every strict table row
bool check_symmetry(const HurwitzTable& table, std::string* msg = nullptr);

// genus-zero closed forms for single-part mu = (k)
Int narayana(int k, int s);
Int weak_genus0_closed(int k, int s);

// N^{-(len mod 2) - sum k} < prod tr X^{k_i} >_c is a Laurent series in N^-2
// with coefficients in Z[c, (c-1)^-1]; for same-sign keys the sharper scaling
// N^{len - 2 - sum k} has no positive powers of N. Checked down to N^{-2 jmax}.
bool check_integrality(const std::vector<int>& key, int jmax,
                       std::string* msg = nullptr);

// match every two-point genus-zero coefficient with k1 + k2 <= order against
// the closed forms built from phi(x1,x2) = c^2 - c(2+x1+x2) + (x1-1)(x2-1)
bool planar_two_point_check(int order, std::string* msg = nullptr);

} // namespace lue
