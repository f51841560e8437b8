#pragma once
// Exact value of a connected correlator: a polynomial numerator in (N, alpha)
// over a multiset of Pochhammer blocks a_j in the denominator (empty multiset
// for moments with all powers positive).
//
// Canonical form: the numerator is divided by every linear factor (alpha + s)
// it shares with the denominator, as long as the leftover denominator is still
// a product of full blocks; the block multiset is then reassembled. This is
// what collapses e.g. a_2*a_0 with numerator N*M*(alpha-2)(alpha+2) down to
// N*(alpha+N) over a_1*a_0.

#include "lue/multipoly.hpp"
#include "lue/pochhammer.hpp"

namespace lue {

struct CorrelatorValue {
    MultiPoly num;
    BlockVec den;

    CorrelatorValue() = default;
    explicit CorrelatorValue(MultiPoly n, BlockVec d = {}) : num(std::move(n)), den(std::move(d)) {}
    explicit CorrelatorValue(long c) : num(MultiPoly(c)) {}

    bool is_zero() const { return num.is_zero(); }

    void reduce();

    CorrelatorValue& operator+=(const CorrelatorValue& o);
    CorrelatorValue& operator-=(const CorrelatorValue& o);
    friend CorrelatorValue operator+(CorrelatorValue a, const CorrelatorValue& b) { a += b; return a; }
    friend CorrelatorValue operator-(CorrelatorValue a, const CorrelatorValue& b) { a -= b; return a; }
    friend CorrelatorValue operator*(const CorrelatorValue& a, const CorrelatorValue& b);
    CorrelatorValue& operator*=(const Rat& c) { num *= c; return *this; }
    CorrelatorValue operator-() const { CorrelatorValue r = *this; r.num = -r.num; return r; }

    // semantic equality (cross multiplied; independent of canonicalization)
    bool equals(const CorrelatorValue& o) const;

    // throws std::domain_error when alpha0 hits a denominator zero
    Rat eval(const Rat& N0, const Rat& alpha0) const;

    std::string to_string(bool latex = false) const;
};

// multiplicity of the root alpha = -s in p (viewed along alpha); if divide,
// p is replaced by the quotient
int alpha_root_multiplicity(MultiPoly& p, int s, int cap, bool divide);

} // namespace lue
