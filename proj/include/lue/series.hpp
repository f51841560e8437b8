#pragma once
// Truncated multivariate Laurent series with explicit exactness windows.
//
// Every variable of a series carries two intervals:
//   hard  [hard_lo, hard_hi]  - a priori support bound of the *underlying*
//                               object (all coefficients outside are zero,
//                               including ones we never computed);
//   known [known_lo, known_hi] - coefficients whose exponent lies inside the
//                               known window of every variable are stored
//                               exactly; anything else (inside hard) is
//                               unknown.
// Requesting a coefficient outside the guaranteed region throws
// TruncationError: operations never return silently-truncated data. Products
// propagate windows: an unknown strip of one factor contaminates the product
// up to the possibly-nonzero extent of the other factor, computed from hard
// bounds and stored support.

#include "lue/rational.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lue {

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long kNegInf = std::numeric_limits<long>::min() / 4;
constexpr long kPosInf = std::numeric_limits<long>::max() / 4;

inline long wadd(long a, long b) {
    if (a <= kNegInf || b <= kNegInf) return kNegInf;
    if (a >= kPosInf || b >= kPosInf) return kPosInf;
    return a + b;
}

struct SeriesWindow {
    long known_lo = kNegInf, known_hi = kPosInf;
    long hard_lo = kNegInf, hard_hi = kPosInf;
    bool has_lower_strip() const { return known_lo > hard_lo; }
    bool has_upper_strip() const { return known_hi < hard_hi; }
};

template <class C>
bool coeff_is_zero(const C& c) {
    if constexpr (requires { c.is_zero(); }) return c.is_zero();
    else return is_zero(c);
}

template <class C>
struct TruncatedSeries {
    int nvars = 1;
    std::map<std::vector<int>, C> sup;
    std::vector<SeriesWindow> win;

    explicit TruncatedSeries(int n = 1) : nvars(n), win((size_t)n) {}

    static TruncatedSeries constant(int nvars, const C& c) {
        TruncatedSeries s(nvars);
        std::vector<int> e((size_t)nvars, 0);
        if (!coeff_is_zero(c)) s.sup.emplace(std::move(e), c);
        return s;
    }

    void set(const std::vector<int>& e, const C& c) {
        if (coeff_is_zero(c)) sup.erase(e);
        else sup[e] = c;
    }

    void add_to(const std::vector<int>& e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = sup.find(e);
        if (it == sup.end()) sup.emplace(e, c);
        else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) sup.erase(it);
        }
    }

    bool hard_zero(const std::vector<int>& e) const {
        for (int v = 0; v < nvars; ++v)
            if (e[(size_t)v] < win[(size_t)v].hard_lo || e[(size_t)v] > win[(size_t)v].hard_hi)
                return true;
        return false;
    }

    bool guaranteed(const std::vector<int>& e) const {
        if (hard_zero(e)) return true;
        for (int v = 0; v < nvars; ++v)
            if (e[(size_t)v] < win[(size_t)v].known_lo || e[(size_t)v] > win[(size_t)v].known_hi)
                return false;
        return true;
    }

    // exact coefficient or TruncationError
    C coeff(const std::vector<int>& e) const {
        if (hard_zero(e)) return C{};
        if (!guaranteed(e)) {
            std::string msg = "coefficient (";
            for (size_t i = 0; i < e.size(); ++i)
                msg += (i ? "," : "") + std::to_string(e[i]);
            msg += ") lies outside the guaranteed window; raise the order margin";
            throw TruncationError(msg);
        }
        auto it = sup.find(e);
        return it == sup.end() ? C{} : it->second;
    }

    // stored support extreme in variable v (NEG/POS inf when empty)
    long sup_min(int v) const {
        long m = kPosInf;
        for (const auto& [e, c] : sup) m = std::min(m, (long)e[(size_t)v]);
        return m;
    }
    long sup_max(int v) const {
        long m = kNegInf;
        for (const auto& [e, c] : sup) m = std::max(m, (long)e[(size_t)v]);
        return m;
    }

    // largest/smallest exponent where the underlying object may be nonzero
    long phn_max(int v) const {
        const auto& w = win[(size_t)v];
        long m = std::min(sup_max(v), w.hard_hi);
        if (w.has_upper_strip()) m = std::max(m, w.hard_hi);
        if (w.has_lower_strip()) m = std::max(m, std::min(w.known_lo - 1, w.hard_hi));
        return m;
    }
    long phn_min(int v) const {
        const auto& w = win[(size_t)v];
        long m = std::max(sup_min(v), w.hard_lo);
        if (w.has_lower_strip()) m = std::min(m, w.hard_lo);
        if (w.has_upper_strip()) m = std::min(m, std::max(w.known_hi + 1, w.hard_lo));
        return m;
    }

    // drop stored coefficients that are no longer guaranteed
    void clip_to_known() {
        for (auto it = sup.begin(); it != sup.end();) {
            if (!guaranteed(it->first)) it = sup.erase(it);
            else ++it;
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        *this = *this + o;
        return *this;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.nvars);
        for (int v = 0; v < a.nvars; ++v) {
            const auto& wa = a.win[(size_t)v];
            const auto& wb = b.win[(size_t)v];
            auto& w = r.win[(size_t)v];
            w.hard_lo = std::min(wa.hard_lo, wb.hard_lo);
            w.hard_hi = std::max(wa.hard_hi, wb.hard_hi);
            w.known_lo = std::max(wa.has_lower_strip() ? wa.known_lo : kNegInf,
                                  wb.has_lower_strip() ? wb.known_lo : kNegInf);
            w.known_hi = std::min(wa.has_upper_strip() ? wa.known_hi : kPosInf,
                                  wb.has_upper_strip() ? wb.known_hi : kPosInf);
        }
        r.sup = a.sup;
        for (const auto& [e, c] : b.sup) r.add_to(e, c);
        r.clip_to_known();
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& [e, c] : r.sup) c = -c;
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.nvars);
        for (int v = 0; v < a.nvars; ++v) {
            const auto& wa = a.win[(size_t)v];
            const auto& wb = b.win[(size_t)v];
            auto& w = r.win[(size_t)v];
            w.hard_lo = wadd(wa.hard_lo, wb.hard_lo);
            w.hard_hi = wadd(wa.hard_hi, wb.hard_hi);
            long lo = kNegInf, hi = kPosInf;
            if (wa.has_lower_strip()) lo = std::max(lo, wadd(wa.known_lo, b.phn_max(v)));
            if (wb.has_lower_strip()) lo = std::max(lo, wadd(wb.known_lo, a.phn_max(v)));
            if (wa.has_upper_strip()) hi = std::min(hi, wadd(wa.known_hi, b.phn_min(v)));
            if (wb.has_upper_strip()) hi = std::min(hi, wadd(wb.known_hi, a.phn_min(v)));
            w.known_lo = lo;
            w.known_hi = hi;
        }
        std::vector<int> e((size_t)a.nvars);
        for (const auto& [ea, ca] : a.sup) {
            for (const auto& [eb, cb] : b.sup) {
                for (int v = 0; v < a.nvars; ++v) e[(size_t)v] = ea[(size_t)v] + eb[(size_t)v];
                if (!r.guaranteed(e)) continue;
                r.add_to(e, ca * cb);
            }
        }
        r.clip_to_known();
        return r;
    }

    // restrict the known window (used to model a caller-requested truncation)
    void clip_window(int v, long lo, long hi) {
        auto& w = win[(size_t)v];
        w.known_lo = std::max(w.known_lo, lo);
        w.known_hi = std::min(w.known_hi, hi);
        clip_to_known();
    }
};

// 1/(x_a - x_b)^p expanded with the `big` variable treated as large:
//   big = a:  sum_{m>=0} binom(m+p-1, m) x_b^m x_a^{-m-p}
//   big = b:  (-1)^p of the mirrored expansion.
// n_terms successive m are retained and the windows record exactly that.
template <class C>
TruncatedSeries<C> geometric_pair_expand(int nvars, int var_a, int var_b, int p,
                                         bool big_is_a, long n_terms) {
    TruncatedSeries<C> s(nvars);
    int big = big_is_a ? var_a : var_b;
    int small = big_is_a ? var_b : var_a;
    Rat sign = big_is_a ? Rat(1) : Rat((p % 2 == 0) ? 1 : -1);
    for (int v = 0; v < nvars; ++v) {
        auto& w = s.win[(size_t)v];
        if (v == big) {
            w.hard_hi = -p;
            w.known_lo = -p - (n_terms - 1);
        } else if (v == small) {
            w.hard_lo = 0;
            w.known_hi = n_terms - 1;
        }
        // other variables: exact constants (full windows)
    }
    std::vector<int> e((size_t)nvars, 0);
    for (long m = 0; m < n_terms; ++m) {
        e[(size_t)big] = (int)(-m - p);
        e[(size_t)small] = (int)m;
        Rat c = sign * Rat(binomial_ll(m + p - 1, m));
        s.set(e, C(c));
    }
    return s;
}

// convenience alias used at API boundaries
template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    return a * b;
}

} // namespace lue
