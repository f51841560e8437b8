#include "lue/correlator_value.hpp"

#include <stdexcept>

namespace lue {

// Synthetic division of p by (alpha + s), grouped over the non-alpha part of
// each monomial. Returns how many times it divides (up to cap); on divide,
// p is replaced by p / (alpha+s)^count.
int alpha_root_multiplicity(MultiPoly& p, int s, int cap, bool divide) {
    if (cap <= 0) return 0;
    if (p.is_zero()) return cap; // zero divisible arbitrarily often
    int count = 0;
    MultiPoly cur = p;
    while (count < cap) {
        // group monomials: key = exponent vector with alpha zeroed
        std::map<Expo, std::vector<Rat>> groups;
        for (const auto& [e, c] : cur.terms) {
            Expo k = e;
            int apow = e[VALPHA];
            k[VALPHA] = 0;
            auto& v = groups[k];
            if ((int)v.size() <= apow) v.resize((size_t)apow + 1, Rat(0));
            v[(size_t)apow] = c;
        }
        MultiPoly quo;
        bool ok = true;
        Rat root(-s);
        for (auto& [k, cs] : groups) {
            // divide cs by (alpha - root)
            int n = (int)cs.size() - 1;
            std::vector<Rat> b((size_t)std::max(n, 0), Rat(0));
            Rat carry = cs[(size_t)n];
            for (int i = n - 1; i >= 0; --i) {
                b[(size_t)i] = carry;
                carry = cs[(size_t)i] + root * carry;
            }
            if (!lue::is_zero(carry)) { ok = false; break; }
            for (int i = 0; i < n; ++i) {
                if (lue::is_zero(b[(size_t)i])) continue;
                Expo e = k;
                e[VALPHA] = (int16_t)i;
                quo.add_term(e, b[(size_t)i]);
            }
        }
        if (!ok) break;
        cur = std::move(quo);
        ++count;
    }
    if (divide && count > 0) p = cur;
    return count;
}

void CorrelatorValue::reduce() {
    if (num.is_zero()) { den.clear(); return; }
    if (den.empty()) return;
    LinFactors lf = blocks_to_linear(den);

    // how much of each (alpha+s) the numerator can absorb
    LinFactors cancel;
    for (const auto& [s, m] : lf) {
        MultiPoly tmp = num;
        int c = alpha_root_multiplicity(tmp, s, m, false);
        if (c > 0) cancel[s] = c;
    }
    if (cancel.empty()) return;

    // leftover after full cancellation
    auto mult_of = [](const LinFactors& f, int s) {
        auto it = f.find(s);
        return it == f.end() ? 0 : it->second;
    };
    int jmax = 0;
    for (const auto& [s, m] : lf) jmax = std::max(jmax, std::abs(s));
    // minimal symmetric, |s|-monotone majorant of the leftover
    std::vector<int> fin((size_t)jmax + 2, 0);
    for (int s = jmax; s >= 0; --s) {
        int left = std::max(mult_of(lf, s) - mult_of(cancel, s),
                            mult_of(lf, -s) - mult_of(cancel, -s));
        fin[(size_t)s] = std::max(left, fin[(size_t)s + 1]);
    }
    LinFactors final_lf;
    for (int s = -jmax; s <= jmax; ++s)
        if (fin[(size_t)std::abs(s)] > 0) final_lf[s] = fin[(size_t)std::abs(s)];

    // actually divide out lf - final_lf
    for (const auto& [s, m] : lf) {
        int take = m - mult_of(final_lf, s);
        if (take <= 0) continue;
        int got = alpha_root_multiplicity(num, s, take, true);
        if (got != take) throw std::logic_error("reduce: divisibility vanished");
    }
    BlockVec nd;
    if (!linear_to_blocks(final_lf, nd))
        throw std::logic_error("reduce: leftover denominator not block-shaped");
    den = std::move(nd);
}

CorrelatorValue& CorrelatorValue::operator+=(const CorrelatorValue& o) {
    if (o.num.is_zero()) return *this;
    if (num.is_zero()) { *this = o; return *this; }
    LinFactors la = blocks_to_linear(den), lb = blocks_to_linear(o.den);
    LinFactors l = linear_lcm(la, lb);
    MultiPoly cof_a = linear_expand(linear_div(l, la));
    MultiPoly cof_b = linear_expand(linear_div(l, lb));
    num = num * cof_a + o.num * cof_b;
    BlockVec d;
    if (!linear_to_blocks(l, d)) throw std::logic_error("add: lcm not block-shaped");
    den = std::move(d);
    reduce();
    return *this;
}

CorrelatorValue& CorrelatorValue::operator-=(const CorrelatorValue& o) {
    CorrelatorValue t = o;
    t.num = -t.num;
    return *this += t;
}

CorrelatorValue operator*(const CorrelatorValue& a, const CorrelatorValue& b) {
    CorrelatorValue r;
    r.num = a.num * b.num;
    r.den = blocks_mul(a.den, b.den);
    r.reduce();
    return r;
}

bool CorrelatorValue::equals(const CorrelatorValue& o) const {
    return num * blocks_expand(o.den) == o.num * blocks_expand(den);
}

Rat CorrelatorValue::eval(const Rat& N0, const Rat& alpha0) const {
    if (blocks_vanish_at(den, alpha0))
        throw std::domain_error("denominator block vanishes at alpha = " + lue::to_string(alpha0));
    std::array<Rat, kNumVars> pt{};
    pt[VN] = N0;
    pt[VALPHA] = alpha0;
    pt[VM] = N0 + alpha0;
    Rat v = num.eval(pt);
    if (den.empty()) return v;
    Rat d = 1;
    for (const auto& [j, m] : den) {
        Rat block = 1;
        for (int s = -j; s <= j; ++s) block *= (alpha0 + s);
        for (int i = 0; i < m; ++i) d *= block;
    }
    return v / d;
}

std::string CorrelatorValue::to_string(bool latex) const {
    std::string n = poly_to_string(num, latex);
    if (den.empty()) return n;
    if (latex) return "\\frac{" + n + "}{" + blocks_to_string(den, true) + "}";
    return "(" + n + ") / (" + blocks_to_string(den, false) + ")";
}

} // namespace lue
