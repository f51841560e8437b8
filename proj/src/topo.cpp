#include "lue/topo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lue {

// ---------------------------------------------------------------- WLaur

void WLaur::add(int p, const Rat& v) {
    if (lue::is_zero(v)) return;
    auto it = c.find(p);
    if (it == c.end()) {
        c.emplace(p, v);
    } else {
        it->second += v;
        if (lue::is_zero(it->second)) c.erase(it);
    }
}

WLaur& WLaur::operator+=(const WLaur& o) {
    for (const auto& [p, v] : o.c) add(p, v);
    return *this;
}

WLaur WLaur::operator-() const {
    WLaur r = *this;
    for (auto& [p, v] : r.c) v = -v;
    return r;
}

WLaur operator*(const WLaur& a, const WLaur& b) {
    WLaur r;
    for (const auto& [pa, va] : a.c)
        for (const auto& [pb, vb] : b.c) r.add(pa + pb, va * vb);
    return r;
}

WLaur& WLaur::operator*=(const Rat& s) {
    if (lue::is_zero(s)) {
        c.clear();
        return *this;
    }
    for (auto& [p, v] : c) v *= s;
    return *this;
}

bool WLaur::all_integer() const {
    for (const auto& [p, v] : c)
        if (!is_integer(v)) return false;
    return true;
}

Rat WLaur::eval(const Rat& w) const {
    Rat acc(0);
    for (const auto& [p, v] : c) {
        if (p >= 0) {
            Rat t = v;
            for (int i = 0; i < p; ++i) t *= w;
            acc += t;
        } else {
            if (lue::is_zero(w)) throw std::domain_error("pole at c = 1");
            Rat t = v;
            for (int i = 0; i < -p; ++i) t /= w;
            acc += t;
        }
    }
    return acc;
}

std::vector<Rat> WLaur::to_c_poly() const {
    if (c.empty()) return {};
    if (lo() < 0)
        throw std::logic_error("negative powers of c-1 where a polynomial in c was expected");
    std::vector<Rat> r((size_t)hi() + 1, Rat(0));
    for (const auto& [j, v] : c)
        for (int s = 0; s <= j; ++s) {
            Rat term = v * Rat(binomial_ll(j, s));
            if ((j - s) % 2 != 0) term = -term;
            r[(size_t)s] += term;
        }
    return r;
}

std::string WLaur::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, v] : c) {
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Rat a = abs(v);
        if (p == 0) {
            os << lue::to_string(a);
        } else {
            if (a != 1) os << lue::to_string(a) << "*";
            os << "(c-1)";
            if (p != 1) os << "^" << p;
        }
    }
    return os.str();
}

// ------------------------------------------------------ scaled expansion

const WLaur& ScaledExpansion::row(int e) const {
    static const WLaur zero{};
    if (!exact && e < floor)
        throw std::logic_error("requested N-power lies below the truncation floor");
    auto it = rows.find(e);
    return it == rows.end() ? zero : it->second;
}

ScaledExpansion scaled_correlator(const std::vector<int>& key, int floor,
                                  const EngineOptions& opt) {
    CorrelatorValue cv = connected_correlator(key, opt);
    MultiPoly num = cv.num;
    if (num.uses_var(VM))
        num = poly_substitute(num, VM, MultiPoly::var(VN) + MultiPoly::var(VALPHA));

    ScaledExpansion out;
    // a_0 = alpha contributes the exact monomial u per power, so only blocks
    // with j > 0 bring in an infinite tail
    out.exact = true;
    for (const auto& [j, mult] : cv.den)
        if (j > 0) { out.exact = false; break; }
    out.floor = floor;

    long T = 0;
    for (const auto& [j, mult] : cv.den) T += (long)(2 * j + 1) * mult;

    int top = 0;
    for (const auto& [e, v] : num.terms) top = std::max(top, e[VN] + e[VALPHA]);

    // u^2-series of prod_j prod_{m<=j} (1 - m^2 u^2)^{-mult_j}, deep enough
    // that every kept row receives all of its contributions
    std::vector<Int> S{Int(1)};
    if (!out.exact) {
        long kmax = std::max(0L, ((long)top - T - floor) / 2);
        S.assign((size_t)kmax + 1, Int(0));
        S[0] = 1;
        for (const auto& [j, mult] : cv.den)
            for (int m = 1; m <= j; ++m) {
                Int m2 = Int(m) * m;
                for (int rep = 0; rep < mult; ++rep)
                    for (long t = 1; t <= kmax; ++t) S[(size_t)t] += m2 * S[(size_t)t - 1];
            }
    }

    for (const auto& [e, v] : num.terms) {
        if (e[VM] || e[VC] || e[VLAMBDA] || e[VEPS])
            throw std::logic_error("unexpected variable in a correlator numerator");
        int base = e[VN] + e[VALPHA];
        long reach = out.exact ? 0 : ((long)base - T - floor) / 2;
        for (long k = 0; k <= reach; ++k) {
            int row = base - (int)T - 2 * (int)k;
            if (!out.exact && row < floor) break;
            out.rows[row].add(e[VALPHA] - (int)T - 2 * (int)k, v * Rat(S[(size_t)k]));
        }
    }
    for (auto it = out.rows.begin(); it != out.rows.end();)
        it = it->second.is_zero() ? out.rows.erase(it) : std::next(it);
    if (out.exact) out.floor = out.rows.empty() ? 0 : out.rows.begin()->first;
    return out;
}

// ------------------------------------------------------------- tables

Int HurwitzTable::at(int g, int s) const {
    if (g < 0 || g >= (int)entries.size())
        throw std::out_of_range("genus outside the computed table");
    if (s < 1 || s > smax) return 0;
    return entries[(size_t)g][(size_t)s - 1];
}

namespace {

std::vector<int> sorted_mu(const std::vector<int>& mu) {
    if (mu.empty()) throw std::invalid_argument("mu must be a nonempty partition");
    for (int m : mu)
        if (m < 1) throw std::invalid_argument("mu parts must be positive");
    std::vector<int> s = mu;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

std::string key_str(const std::vector<int>& k) {
    std::string s = "(";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

} // namespace

HurwitzTable expand_strict(const std::vector<int>& mu, int gmax, const EngineOptions& opt) {
    std::vector<int> m = sorted_mu(mu);
    if (gmax < 0) throw std::invalid_argument("gmax must be nonnegative");
    int l = (int)m.size();
    int d = std::accumulate(m.begin(), m.end(), 0);

    ScaledExpansion sc = scaled_correlator(m, 0, opt);
    if (!sc.exact)
        throw std::logic_error("positive correlator unexpectedly carries alpha blocks");

    HurwitzTable t;
    t.flavor = MonotoneFlavor::Strict;
    t.mu = m;
    t.smax = d - l + 1;
    t.entries.assign((size_t)gmax + 1, std::vector<Int>((size_t)t.smax, Int(0)));

    int shift = l - d - 2;
    for (const auto& [e, wl] : sc.rows) {
        int ee = e + shift;
        if (ee > 0 || ee % 2 != 0)
            throw std::logic_error("strict expansion of " + key_str(m) + ": stray power N^" +
                                   std::to_string(ee));
        int g = -ee / 2;
        std::vector<Rat> cp = wl.to_c_poly();
        if (!cp.empty() && !lue::is_zero(cp[0]))
            throw std::logic_error("strict expansion of " + key_str(m) +
                                   ": nonzero constant term in c at genus " + std::to_string(g));
        if ((int)cp.size() - 1 > 1 - 2 * g + d - l)
            throw std::logic_error("strict expansion of " + key_str(m) +
                                   ": c-degree exceeds 1-2g+|mu|-len at genus " + std::to_string(g));
        for (int s = 1; s < (int)cp.size(); ++s) {
            if (!is_integer(cp[(size_t)s]))
                throw std::logic_error("strict expansion of " + key_str(m) + ": non-integer entry");
            if (g <= gmax) t.entries[(size_t)g][(size_t)s - 1] = cp[(size_t)s].get_num();
        }
    }
    return t;
}

HurwitzTable expand_weak(const std::vector<int>& mu, int gmax, int smax, const EngineOptions& opt) {
    std::vector<int> m = sorted_mu(mu);
    if (gmax < 0) throw std::invalid_argument("gmax must be nonnegative");
    int l = (int)m.size();
    int d = std::accumulate(m.begin(), m.end(), 0);
    if (smax < 0) smax = d;
    if (smax < 1 || smax > d) throw std::invalid_argument("smax must lie in 1..|mu|");

    std::vector<int> key(m.size());
    for (size_t i = 0; i < m.size(); ++i) key[i] = -m[i];

    int shift = l + d - 2;
    int fl = -2 * gmax - 1 - shift;
    ScaledExpansion sc = scaled_correlator(key, fl, opt);
    // order-bump stability: a deeper truncation must reproduce every kept row
    ScaledExpansion deep = scaled_correlator(key, fl - 2, opt);
    for (const auto& [e, wl] : sc.rows)
        if (!(deep.row(e) == wl))
            throw std::logic_error("weak expansion of " + key_str(m) +
                                   " is unstable under an order bump");
    for (const auto& [e, wl] : deep.rows)
        if (e >= fl && !(sc.row(e) == wl))
            throw std::logic_error("weak expansion of " + key_str(m) +
                                   " is unstable under an order bump");

    HurwitzTable t;
    t.flavor = MonotoneFlavor::Weak;
    t.mu = m;
    t.smax = smax;
    t.entries.assign((size_t)gmax + 1, std::vector<Int>((size_t)smax, Int(0)));

    for (const auto& [e, wl] : sc.rows) {
        int ee = e + shift;
        if (ee > 0)
            throw std::logic_error("weak expansion of " + key_str(m) + ": stray power N^" +
                                   std::to_string(ee));
        if (ee % 2 != 0)
            throw std::logic_error("weak expansion of " + key_str(m) + ": odd power N^" +
                                   std::to_string(ee));
        int g = -ee / 2;
        if (g > gmax) continue;
        int hi_allowed = -(2 * g - 2 + d + l + 1);
        int lo_allowed = -(2 * g - 2 + d + l + d);
        if (wl.lo() < lo_allowed || wl.hi() > hi_allowed)
            throw std::logic_error("weak expansion of " + key_str(m) +
                                   ": w-support escapes the s=1..|mu| window at genus " +
                                   std::to_string(g));
        for (int s = 1; s <= smax; ++s) {
            Rat v = wl.coeff(-(2 * g - 2 + d + l + s));
            if (!is_integer(v) || sgn(v) < 0)
                throw std::logic_error("weak expansion of " + key_str(m) +
                                       ": entry is not a nonnegative integer");
            t.entries[(size_t)g][(size_t)s - 1] = v.get_num();
        }
    }
    return t;
}

bool check_symmetry(const HurwitzTable& t, std::string* msg) {
    if (t.flavor != MonotoneFlavor::Strict)
        throw std::invalid_argument("the s-symmetry holds for strict tables");
    int l = (int)t.mu.size();
    int d = std::accumulate(t.mu.begin(), t.mu.end(), 0);
    for (int g = 0; g < (int)t.entries.size(); ++g)
        for (int s = 1; s <= t.smax; ++s) {
            int sp = 2 - 2 * g + d - l - s;
            Int a = t.at(g, s);
            Int b = (sp >= 1 && sp <= t.smax) ? t.at(g, sp) : Int(0);
            if (a != b) {
                if (msg) {
                    std::ostringstream os;
                    os << "H_" << g << key_str(t.mu) << ": s=" << s << " gives " << a.get_str()
                       << " but s=" << sp << " gives " << b.get_str();
                    *msg = os.str();
                }
                return false;
            }
        }
    return true;
}

// ------------------------------------------------- genus-zero closed forms

Int narayana(int k, int s) {
    if (k < 1) throw std::invalid_argument("narayana: k must be positive");
    if (s < 1 || s > k) return 0;
    Rat v = Rat(binomial_ll(k, s) * binomial_ll(k, s - 1)) / Rat(k);
    if (!is_integer(v)) throw std::logic_error("narayana: non-integer value");
    return v.get_num();
}

Int weak_genus0_closed(int k, int s) {
    if (k < 1) throw std::invalid_argument("weak_genus0_closed: k must be positive");
    if (s < 1 || s > k) return 0;
    if (k == 1) return 1;
    Rat v = Rat(binomial_ll(k - 1, k - s)) * pochhammer(Rat(s + 1), (unsigned long)(k - 2)) /
            Rat(factorial((unsigned long)(k - 1)));
    if (!is_integer(v)) throw std::logic_error("weak_genus0_closed: non-integer value");
    return v.get_num();
}

// ---------------------------------------------------------- integrality

bool check_integrality(const std::vector<int>& key, int jmax, std::string* msg) {
    auto fail = [&](const std::string& what) {
        if (msg) *msg = "key " + key_str(key) + ": " + what;
        return false;
    };
    std::vector<int> k = canonical_key(key);
    int l = (int)k.size();
    int sk = std::accumulate(k.begin(), k.end(), 0);
    int sgen = -(l % 2) - sk;
    bool same_sign = std::all_of(k.begin(), k.end(), [](int x) { return x > 0; }) ||
                     std::all_of(k.begin(), k.end(), [](int x) { return x < 0; });
    int ssharp = l - 2 - sk;

    ScaledExpansion sc = scaled_correlator(k, -2 * jmax - 1 - sgen);
    for (const auto& [e, wl] : sc.rows) {
        if ((e + sgen) % 2 != 0)
            return fail("odd power N^" + std::to_string(e + sgen) +
                        " in the N^(-(len mod 2)-sum k) scaling");
        if (!wl.all_integer())
            return fail("coefficient of N^" + std::to_string(e) +
                        " is not in Z[c,1/(c-1)]: " + wl.to_string());
        if (same_sign && e + ssharp > 0)
            return fail("positive power N^" + std::to_string(e + ssharp) +
                        " under the sharper same-sign scaling");
    }
    return true;
}

// ------------------------------------------------- planar two-point check

namespace {

using USeries = std::vector<WLaur>; // coefficient of t^m

// sqrt of a series with constant term 1
USeries usqrt1(const USeries& p, int n) {
    USeries b((size_t)n);
    b[0] = WLaur(Rat(1));
    for (int t = 1; t < n; ++t) {
        WLaur acc = (size_t)t < p.size() ? p[(size_t)t] : WLaur{};
        for (int i = 1; i < t; ++i) acc += -(b[(size_t)i] * b[(size_t)(t - i)]);
        acc *= Rat(1, 2);
        b[(size_t)t] = acc;
    }
    return b;
}

// inverse of a series with constant term 1
USeries uinv1(const USeries& p, int n) {
    USeries b((size_t)n);
    b[0] = WLaur(Rat(1));
    for (int t = 1; t < n; ++t) {
        WLaur acc;
        for (int i = 1; i <= t; ++i)
            if ((size_t)i < p.size()) acc += p[(size_t)i] * b[(size_t)(t - i)];
        b[(size_t)t] = -acc;
    }
    return b;
}

// square root of a single monomial r (c-1)^{2h}; anything else means the
// series square root does not exist at this expansion site
WLaur wlaur_sqrt_mono(const WLaur& p0) {
    if (p0.c.size() != 1)
        throw std::domain_error("series square root does not exist here (wrong expansion site)");
    auto [pw, v] = *p0.c.begin();
    Int sn = sqrt(v.get_num()), sd = sqrt(v.get_den());
    if (pw % 2 != 0 || sgn(v) <= 0 || sn * sn != v.get_num() || sd * sd != v.get_den())
        throw std::domain_error("series square root does not exist here (wrong expansion site)");
    return WLaur::mono(pw / 2, Rat(sn) / Rat(sd));
}

// n terms of 1/sqrt(P) for a series whose leading term is an invertible monomial
USeries uinvsqrt(const USeries& P, int n) {
    WLaur s0 = wlaur_sqrt_mono(P.at(0));
    auto [pw, v] = *s0.c.begin();
    WLaur inv2 = WLaur::mono(-2 * pw, Rat(1) / (v * v)); // 1/s0^2
    USeries norm((size_t)n);
    for (int t = 0; t < n; ++t)
        norm[(size_t)t] = ((size_t)t < P.size() ? P[(size_t)t] : WLaur{}) * inv2;
    USeries r = uinv1(usqrt1(norm, n), n);
    WLaur invs0 = WLaur::mono(-pw, Rat(1) / v);
    for (auto& x : r) x = x * invs0;
    return r;
}

// phi(x,x) = x^2 - 2(c+1) x + (c-1)^2 read off at the site: t = 1/x at
// infinity, t = x at zero
USeries phi_diag(bool at_inf) {
    WLaur lin;
    lin.add(1, Rat(-2));
    lin.add(0, Rat(-4)); // -2(c+1) = -2(w+2)
    USeries p(3);
    p[at_inf ? 0 : 2] = WLaur(Rat(1));
    p[1] = lin;
    p[at_inf ? 2 : 0] = WLaur::mono(2, Rat(1));
    return p;
}

// embed a one-variable series as a two-variable truncated series; exponent of
// the carrier variable is -1-m (infinity site) or m (zero site)
TruncatedSeries<WLaur> lift_uni(const USeries& q, int var, bool at_inf) {
    TruncatedSeries<WLaur> s(2);
    int n = (int)q.size();
    auto& w = s.win[(size_t)var];
    if (at_inf) {
        w.hard_hi = -1;
        w.known_lo = -n;
    } else {
        w.hard_lo = 0;
        w.known_hi = n - 1;
    }
    // constant along the other variable
    auto& o = s.win[(size_t)(1 - var)];
    o.hard_lo = o.hard_hi = 0;
    std::vector<int> e{0, 0};
    for (int m = 0; m < n; ++m) {
        e[(size_t)var] = at_inf ? -1 - m : m;
        s.set(e, q[(size_t)m]);
    }
    return s;
}

TruncatedSeries<WLaur> phi_pair() {
    TruncatedSeries<WLaur> s(2);
    for (int v = 0; v < 2; ++v) {
        s.win[(size_t)v].hard_lo = 0;
        s.win[(size_t)v].hard_hi = 1;
    }
    s.set({0, 0}, WLaur::mono(2, Rat(1)));
    WLaur mw;
    mw.add(1, Rat(-1));
    mw.add(0, Rat(-2)); // -(c+1)
    s.set({1, 0}, mw);
    s.set({0, 1}, mw);
    s.set({1, 1}, WLaur(Rat(1)));
    return s;
}

// coefficient of x1^{e1} x2^{e2} in S / (x1 - x2)^2 with the geometric factor
// expanded in the region where `big` dominates: sum_m (m+1) small^m big^{-m-2}.
// The factor is homogeneous of total degree -2 and S has finite hard support
// in the big variable, so the sum below is finite.
WLaur geom2_coeff(const TruncatedSeries<WLaur>& S, int e1, int e2, bool big_is_x1) {
    WLaur acc;
    for (int m = 0;; ++m) {
        std::vector<int> a = big_is_x1 ? std::vector<int>{e1 + m + 2, e2 - m}
                                       : std::vector<int>{e1 - m, e2 + m + 2};
        if (big_is_x1 ? (long)a[0] > S.win[0].hard_hi : (long)a[0] < S.win[0].hard_lo) break;
        WLaur t = S.coeff(a);
        t *= Rat(m + 1);
        acc += t;
    }
    return acc;
}

} // namespace

bool planar_two_point_check(int order, std::string* msg) {
    if (order < 2 || order > 8)
        throw std::invalid_argument("planar two-point check: order must lie in 2..8");
    int n = order + 4;

    auto fail = [&](const char* kind, int k1, int k2, const WLaur& want, const WLaur& got) {
        if (msg) {
            std::ostringstream os;
            os << kind << " pair (" << k1 << "," << k2 << "): closed form gives " << want.to_string()
               << " but the correlator gives " << got.to_string();
            *msg = os.str();
        }
        return false;
    };

    USeries qinf = uinvsqrt(phi_diag(true), n);
    USeries qzero = uinvsqrt(phi_diag(false), n);
    auto one = TruncatedSeries<WLaur>::constant(2, WLaur(Rat(1)));
    for (auto& w : one.win) w.hard_lo = w.hard_hi = 0;
    auto phi = phi_pair();
    Rat half(1, 2);

    // both indices at infinity: coefficient of x1^{-k1-1} x2^{-k2-1} is the
    // genus-zero part of < tr X^{k1} tr X^{k2} >_c
    {
        auto S = phi * lift_uni(qinf, 0, true) * lift_uni(qinf, 1, true) - one;
        for (int k1 = 1; k1 < order; ++k1)
            for (int k2 = 1; k1 + k2 <= order; ++k2) {
                WLaur want = geom2_coeff(S, -k1 - 1, -k2 - 1, true);
                want *= half;
                WLaur got = scaled_correlator({k1, k2}, 0).row(k1 + k2);
                if (!(want == got)) return fail("infinity-infinity", k1, k2, want, got);
            }
    }
    // both indices at zero: coefficient of x1^{k1-1} x2^{k2-1} against
    // < tr X^{-k1} tr X^{-k2} >_c
    {
        auto S = phi * lift_uni(qzero, 0, false) * lift_uni(qzero, 1, false) - one;
        for (int k1 = 1; k1 < order; ++k1)
            for (int k2 = 1; k1 + k2 <= order; ++k2) {
                WLaur want = geom2_coeff(S, k1 - 1, k2 - 1, false);
                want *= half;
                WLaur got = scaled_correlator({-k1, -k2}, -k1 - k2).row(-k1 - k2);
                if (!(want == got)) return fail("zero-zero", k1, k2, want, got);
            }
    }
    // mixed: the generating function carries an overall minus sign, so the
    // genus-zero part of < tr X^{k1} tr X^{-k2} >_c is +1/2 the (phi + sqrt)
    // coefficient
    {
        auto S = phi * lift_uni(qinf, 0, true) * lift_uni(qzero, 1, false) + one;
        for (int k1 = 1; k1 < order; ++k1)
            for (int k2 = 1; k1 + k2 <= order; ++k2) {
                WLaur want = geom2_coeff(S, -k1 - 1, k2 - 1, true);
                want *= half;
                WLaur got = scaled_correlator({k1, -k2}, k1 - k2).row(k1 - k2);
                if (!(want == got)) return fail("mixed", k1, k2, want, got);
            }
    }
    return true;
}

} // namespace lue
