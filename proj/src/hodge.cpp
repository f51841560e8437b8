#include "lue/hodge.hpp"

#include <numeric>
#include <sstream>

namespace lue {

namespace {

Rat pow2(int e) {
    if (e >= 0) return Rat(Int(1) << e);
    return Rat(1) / Rat(Int(1) << (-e));
}

Int central_binom(int m) { return binomial_ll(2 * m, m); }

} // namespace

HodgeSeries hodge_rhs(const std::vector<int>& mu, int gmax) {
    if (gmax < 0) throw std::invalid_argument("gmax must be nonnegative");
    HurwitzTable t = expand_strict(mu, gmax);
    int l = (int)t.mu.size();
    int d = std::accumulate(t.mu.begin(), t.mu.end(), 0);

    HodgeSeries out;
    for (int gamma = 0; gamma <= gmax; ++gamma) {
        Rat pref = pow2(l + 2 * gamma - 2);
        for (int s = 1; s <= t.smax; ++s) {
            Int H = t.at(gamma, s);
            if (lue::is_zero(H)) continue;
            int X = 2 - 2 * gamma + d - l - s; // >= 1 whenever H is nonzero
            // (lambda + eps/2)^X (lambda - eps/2)^s term by term
            for (int i = 0; i <= X; ++i)
                for (int j = 0; j <= s; ++j) {
                    int ep = 2 * gamma - 2 + i + j;
                    if (ep > 2 * gmax - 2) continue; // incomplete above, clipped
                    Rat coef = pref * Rat(H) * Rat(binomial_ll(X, i) * binomial_ll(s, j)) *
                               pow2(-(i + j));
                    if (j % 2 != 0) coef = -coef;
                    out[ep] += MultiPoly::var(VLAMBDA, X + s - i - j, coef);
                }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) {
            it = out.erase(it);
            continue;
        }
        if (it->first % 2 != 0)
            throw std::logic_error("odd power of eps survived in the Hodge combination");
        ++it;
    }
    return out;
}

MultiPoly hodge_genus0(const std::vector<int>& mu) {
    HurwitzTable t = expand_strict(mu, 0);
    int l = (int)t.mu.size();
    int d = std::accumulate(t.mu.begin(), t.mu.end(), 0);
    Int sum(0);
    for (int s = 1; s <= t.smax; ++s) sum += t.at(0, s);
    return MultiPoly::var(VLAMBDA, d + 2 - l, pow2(l - 2) * Rat(sum));
}

bool genus0_lambda_expansion_check(int mu1, std::string* msg) {
    if (mu1 < 1 || mu1 > 10)
        throw std::invalid_argument("genus0 lambda expansion check: mu1 must lie in 1..10");
    MultiPoly P = hodge_genus0({mu1});
    Int cb = central_binom(mu1);
    Rat want[3] = {Rat(cb) / Rat(2 * (mu1 + 1)), Rat(cb) / 2, Rat(mu1) * Rat(cb) / 4};
    for (int b = 0; b < 3; ++b) {
        // b-th Taylor coefficient around lambda = 1
        Rat got(0);
        for (const auto& [e, v] : P.terms) got += v * Rat(binomial_ll(e[VLAMBDA], b));
        if (got != want[b]) {
            if (msg) {
                std::ostringstream os;
                os << "mu1=" << mu1 << ": (lambda-1)^" << b << " coefficient is "
                   << lue::to_string(got) << ", expected " << lue::to_string(want[b]);
                *msg = os.str();
            }
            return false;
        }
    }
    return true;
}

ElsvCombination elsv_combination(const std::vector<int>& mu, int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    HurwitzTable t = expand_strict(mu, g);
    int l = (int)t.mu.size();
    int d = std::accumulate(t.mu.begin(), t.mu.end(), 0);

    Rat lhs(0);
    for (int gamma = 0; gamma <= g; ++gamma)
        for (int s = 1; s <= t.smax; ++s) {
            Int H = t.at(gamma, s);
            if (lue::is_zero(H)) continue;
            int X = 2 - 2 * gamma + d - l - s;
            Int inner(0);
            for (int p = 0; p <= 2 * (g - gamma); ++p) {
                Int term = binomial_ll(X, p) * binomial_ll(s, 2 * (g - gamma) - p);
                inner += (p % 2 == 0) ? term : -term;
            }
            lhs += pow2(4 * gamma) * Rat(inner) * Rat(H);
        }

    Rat denom = pow2(3 * g + 1 - l);
    for (int m : t.mu) denom *= Rat(m) * Rat(central_binom(m));
    return ElsvCombination{lhs, lhs / denom};
}

bool hodge_routes_check(const std::vector<int>& mu, int gmax, std::string* msg) {
    HodgeSeries rhs = hodge_rhs(mu, gmax);
    int l = (int)mu.size();
    for (int g = 0; g <= gmax; ++g) {
        Rat via_series(0);
        auto it = rhs.find(2 * g - 2);
        if (it != rhs.end())
            for (const auto& [e, v] : it->second.terms) via_series += v; // lambda = 1
        Rat via_bracket = pow2(l - 2 * g - 2) * elsv_combination(mu, g).hurwitz_side;
        if (via_series != via_bracket) {
            if (msg) {
                std::ostringstream os;
                os << "genus " << g << ": eps-series route gives " << lue::to_string(via_series)
                   << ", binomial bracket gives " << lue::to_string(via_bracket);
                *msg = os.str();
            }
            return false;
        }
    }
    return true;
}

MultiPoly hodge_A_quadratic(const std::vector<int>& mu) {
    std::vector<int> m = mu;
    std::sort(m.begin(), m.end(), std::greater<int>());
    if (m.empty() || m.size() > 2 || m.back() < 1)
        throw std::invalid_argument("the quadratic delta term is defined for len(mu) <= 2");
    if (m.size() == 1) {
        Rat cb = Rat(central_binom(m[0]));
        MultiPoly r = MultiPoly::var(VLAMBDA, 1, cb / 2);
        r += MultiPoly(-cb * Rat(m[0]) / Rat(2 * (m[0] + 1)));
        return r;
    }
    Rat v = Rat(m[0]) * Rat(m[1]) / Rat(2 * (m[0] + m[1]));
    v *= Rat(central_binom(m[0]) * central_binom(m[1]));
    return MultiPoly(v);
}

} // namespace lue
