#include "lue/resolvent.hpp"

#include "lue/hahn.hpp"
#include "lue/pochhammer.hpp"

#include <algorithm>
#include <stdexcept>

namespace lue {

namespace {

// substitute M -> N + alpha so resolvent entries live in (N, alpha)
MultiPoly to_n_alpha(const MultiPoly& p) {
    MultiPoly repl;
    Expo en{};
    en[VN] = 1;
    repl.add_term(en, Rat(1));
    Expo ea{};
    ea[VALPHA] = 1;
    repl.add_term(ea, Rat(1));
    return poly_substitute(p, VM, repl);
}

CorrelatorValue cv_poly(MultiPoly p) { return CorrelatorValue{std::move(p), {}}; }

MultiPoly mono(Var v, int e, const Rat& c) {
    MultiPoly p;
    Expo ex{};
    ex[v] = (int16_t)e;
    p.add_term(ex, c);
    return p;
}

} // namespace

std::vector<int> canonical_key(std::vector<int> key) {
    for (int k : key)
        if (k == 0) throw std::invalid_argument("correlator key entries must be nonzero");
    std::sort(key.begin(), key.end(), [](int a, int b) {
        bool pa = a > 0, pb = b > 0;
        if (pa != pb) return pa;
        return a > b;
    });
    return key;
}

ResolventSeries build_resolvent(int sign, int lmax) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("resolvent sign must be +1 or -1");
    if (lmax < 0) throw std::invalid_argument("lmax must be nonnegative");

    ResolventSeries R;
    // common window for all four entries
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            auto& w = R.e[i][j].win[0];
            if (sign > 0) {
                w.hard_hi = 0; // no positive powers of x ever appear
                w.known_lo = -lmax - 1;
                w.known_hi = kPosInf;
            } else {
                w.hard_lo = 0;
                w.known_hi = lmax;
                w.known_lo = kNegInf;
            }
        }

    MultiPoly nm = mono(VN, 1, Rat(1)) * (mono(VN, 1, Rat(1)) + mono(VALPHA, 1, Rat(1)));

    R.e[0][0].add_to({0}, cv_poly(mono(VN, 0, Rat(1)))); // the E_11 part

    for (int l = 0; l <= lmax; ++l) {
        MultiPoly A = to_n_alpha(coeff_A(l));
        MultiPoly B = to_n_alpha(coeff_B(l));
        MultiPoly Bs = to_n_alpha(coeff_B_shifted(l));
        if (sign > 0) {
            int e = -l - 1;
            R.e[0][0].add_to({e}, cv_poly(A * Rat(l)));
            R.e[0][1].add_to({e}, cv_poly(Bs));
            R.e[1][0].add_to({e}, cv_poly(-(nm * B)));
            R.e[1][1].add_to({e}, cv_poly(A * Rat(-l)));
        } else {
            BlockVec den{{l, 1}}; // (alpha - l)_{2l+1}
            R.e[0][0].add_to({l}, CorrelatorValue{A * Rat(l + 1), den});
            R.e[0][1].add_to({l}, CorrelatorValue{-Bs, den});
            R.e[1][0].add_to({l}, CorrelatorValue{nm * B, den});
            R.e[1][1].add_to({l}, CorrelatorValue{A * Rat(-(l + 1)), den});
        }
    }
    return R;
}

CorrelatorValue one_point(int k) {
    if (k == 0) throw std::invalid_argument("one_point: zero power");
    if (k > 0) return cv_poly(to_n_alpha(coeff_A(k)));
    int m = -k;
    return CorrelatorValue{to_n_alpha(coeff_A(m - 1)), BlockVec{{m - 1, 1}}};
}

} // namespace lue
