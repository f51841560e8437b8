#pragma once
// Exact single-variable Laurent polynomials (negative exponents allowed).
// Used for coefficients in the 1/(c-1) grading of the large-N expansions:
// there the natural unit is w = c - 1, and genus coefficients are Laurent
// polynomials in w with integer entries.

#include "lue/rational.hpp"

#include <map>
#include <string>

namespace lue {

struct Laurent1 {
    std::map<int, Rat> terms; // exponent -> coefficient, no zeros stored

    Laurent1() = default;
    explicit Laurent1(const Rat& c) { if (!lue::is_zero(c)) terms[0] = c; }
    explicit Laurent1(long c) : Laurent1(Rat(c)) {}
    static Laurent1 unit(int pow, const Rat& c = Rat(1)) {
        Laurent1 l;
        if (!lue::is_zero(c)) l.terms[pow] = c;
        return l;
    }

    bool is_zero() const { return terms.empty(); }
    int lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    int hi() const { return terms.empty() ? 0 : terms.rbegin()->first; }

    Rat coeff(int k) const {
        auto it = terms.find(k);
        return it == terms.end() ? Rat(0) : it->second;
    }

    void add_term(int k, const Rat& c) {
        if (lue::is_zero(c)) return;
        auto it = terms.find(k);
        if (it == terms.end()) terms.emplace(k, c);
        else {
            it->second += c;
            if (lue::is_zero(it->second)) terms.erase(it);
        }
    }

    Laurent1& operator+=(const Laurent1& o) {
        for (const auto& [k, c] : o.terms) add_term(k, c);
        return *this;
    }
    Laurent1& operator-=(const Laurent1& o) {
        for (const auto& [k, c] : o.terms) add_term(k, -c);
        return *this;
    }
    friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { a += b; return a; }
    friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { a -= b; return a; }
    friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
        Laurent1 r;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) r.add_term(ka + kb, ca * cb);
        return r;
    }
    Laurent1 operator-() const {
        Laurent1 r;
        for (const auto& [k, c] : terms) r.terms[k] = -c;
        return r;
    }
    Laurent1& operator*=(const Rat& c) {
        if (lue::is_zero(c)) { terms.clear(); return *this; }
        for (auto& [k, v] : terms) v *= c;
        return *this;
    }
    bool operator==(const Laurent1& o) const { return terms == o.terms; }
    bool operator!=(const Laurent1& o) const { return !(*this == o); }

    bool is_integral() const {
        for (const auto& [k, c] : terms)
            if (c.get_den() != 1) return false;
        return true;
    }

    std::string to_string(const std::string& var) const;
};

std::string laurent_to_string(const Laurent1& l, const std::string& var);

} // namespace lue
