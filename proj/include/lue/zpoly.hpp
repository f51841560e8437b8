#pragma once
// Dense univariate integer polynomials (in alpha) for the correlator engine's
// hot path, plus exact Newton interpolation helpers used to reconstruct the
// N-dependence from integer samples.

#include "lue/multipoly.hpp"
#include "lue/rational.hpp"

#include <vector>

namespace lue {

struct ZPoly {
    std::vector<Int> c; // c[i] = coefficient of alpha^i, no trailing zeros

    ZPoly() = default;
    explicit ZPoly(long v) { if (v) c.assign(1, Int(v)); }
    explicit ZPoly(const Int& v) { if (sgn(v)) c.assign(1, v); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }

    void normalize() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }

    ZPoly& operator+=(const ZPoly& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        normalize();
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        normalize();
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { a += b; return a; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { a -= b; return a; }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (sgn(a.c[i]) == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        r.normalize();
        return r;
    }

    // *this += p * q (fused, avoids temporaries in the engine loop)
    void add_mul(const ZPoly& p, const ZPoly& q) {
        if (p.is_zero() || q.is_zero()) return;
        size_t need = p.c.size() + q.c.size() - 1;
        if (c.size() < need) c.resize(need);
        for (size_t i = 0; i < p.c.size(); ++i) {
            if (sgn(p.c[i]) == 0) continue;
            for (size_t j = 0; j < q.c.size(); ++j)
                mpz_addmul(c[i + j].get_mpz_t(), p.c[i].get_mpz_t(), q.c[j].get_mpz_t());
        }
        normalize();
    }

    ZPoly& operator*=(const Int& k) {
        if (sgn(k) == 0) { c.clear(); return *this; }
        for (auto& x : c) x *= k;
        return *this;
    }

    bool operator==(const ZPoly& o) const { return c == o.c; }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = c.size(); i-- > 0;) { acc *= x; acc += c[i]; }
        return acc;
    }

    MultiPoly to_multipoly(int var = VALPHA) const {
        MultiPoly p;
        for (size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            Expo e{};
            e[var] = (int16_t)i;
            p.terms[e] = Rat(c[i]);
        }
        return p;
    }
};

// product of (alpha + s)^m over the factor multiset, as a dense ZPoly
ZPoly zpoly_from_linear(const std::map<int, int>& lf);

// Newton interpolation through (xs[i], ys[i]); exact, returns monomial
// coefficients (constant term first). xs must be pairwise distinct.
std::vector<Rat> newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace lue
