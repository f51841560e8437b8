#include "lue/hahn.hpp"

#include <mutex>
#include <stdexcept>

namespace lue {

namespace {

// rising factorial (base + off)_len as a MultiPoly, base a variable
MultiPoly rising(int var, int off, int len) {
    MultiPoly p{Rat(1)};
    for (int i = 0; i < len; ++i) {
        MultiPoly f = MultiPoly::var(var);
        f += MultiPoly(Rat(off + i));
        p = p * f;
    }
    return p;
}

} // namespace

MultiPoly coeff_A_sum(int l) {
    if (l < 0) throw std::invalid_argument("coeff_A_sum: l < 0");
    if (l == 0) return MultiPoly::var(VN);
    MultiPoly acc;
    for (int j = 0; j <= l - 1; ++j) {
        // (-1)^j / (j! (l-1-j)!) * (N-j)_l (M-j)_l
        Rat coef(1);
        coef /= Rat(factorial((unsigned long)j) * factorial((unsigned long)(l - 1 - j)));
        if (j & 1) coef = -coef;
        MultiPoly t = rising(VN, -j, l) * rising(VM, -j, l);
        t *= coef;
        acc += t;
    }
    acc *= Rat(1, l);
    return acc;
}

MultiPoly coeff_B_sum(int l) {
    if (l < 0) throw std::invalid_argument("coeff_B_sum: l < 0");
    if (l == 0) return MultiPoly(1L);
    MultiPoly acc;
    for (int j = 0; j <= l; ++j) {
        Rat coef(1);
        coef /= Rat(factorial((unsigned long)j) * factorial((unsigned long)(l - j)));
        if (j & 1) coef = -coef;
        MultiPoly t = rising(VN, -j, l) * rising(VM, -j, l);
        t *= coef;
        acc += t;
    }
    return acc;
}

std::vector<MultiPoly> coeff_recursion(CoeffKind kind, int lmax) {
    std::vector<MultiPoly> f;
    f.reserve((size_t)lmax + 1);
    MultiPoly N = MultiPoly::var(VN), M = MultiPoly::var(VM);
    MultiPoly NM = N * M;
    MultiPoly diff2 = (M - N) * (M - N);
    if (kind == CoeffKind::A) {
        f.push_back(N);
        if (lmax >= 1) f.push_back(NM);
        for (int l = 1; l + 1 <= lmax; ++l) {
            // (l+2) A_{l+1} = (2l+1)(N+M) A_l + (l-1)(l^2 - (M-N)^2) A_{l-1}
            MultiPoly rhs = (N + M) * f[(size_t)l];
            rhs *= Rat(2 * l + 1);
            MultiPoly low = MultiPoly(Rat(l * l)) - diff2;
            low = low * f[(size_t)l - 1];
            low *= Rat(l - 1);
            rhs += low;
            rhs *= Rat(1, l + 2);
            f.push_back(rhs);
        }
    } else {
        f.push_back(MultiPoly(1L));
        if (lmax >= 1) f.push_back(N + M - MultiPoly(1L));
        for (int l = 1; l + 1 <= lmax; ++l) {
            // (l+1) B_{l+1} = (2l+1)(N+M-1) B_l + l(l^2 - (M-N)^2) B_{l-1}
            MultiPoly rhs = (N + M - MultiPoly(1L)) * f[(size_t)l];
            rhs *= Rat(2 * l + 1);
            MultiPoly low = MultiPoly(Rat(l * l)) - diff2;
            low = low * f[(size_t)l - 1];
            low *= Rat(l);
            rhs += low;
            rhs *= Rat(1, l + 1);
            f.push_back(rhs);
        }
    }
    return f;
}

MultiPoly coeff_integer_form(CoeffKind kind, int l) {
    if (l < 0) throw std::invalid_argument("coeff_integer_form: l < 0");
    if (l == 0) return kind == CoeffKind::A ? MultiPoly::var(VN) : MultiPoly(1L);
    MultiPoly acc;
    Int lf = factorial((unsigned long)l), lm1f = factorial((unsigned long)(l - 1));
    if (kind == CoeffKind::A) {
        // sum over a, b >= 0, a+b <= l-1 of
        //   l!(l-1)! / ((a+1)! (b+1)! a! b! (l-1-a-b)!) (N-a)_{a+1} (M-b)_{b+1}
        for (int a = 0; a + 0 <= l - 1; ++a) {
            for (int b = 0; a + b <= l - 1; ++b) {
                Int den = factorial((unsigned long)(a + 1)) * factorial((unsigned long)(b + 1)) *
                          factorial((unsigned long)a) * factorial((unsigned long)b) *
                          factorial((unsigned long)(l - 1 - a - b));
                Rat coef = Rat(lf * lm1f) / Rat(den);
                MultiPoly t = rising(VN, -a, a + 1) * rising(VM, -b, b + 1);
                t *= coef;
                acc += t;
            }
        }
    } else {
        // sum over a, b >= 0, a+b <= l of
        //   l! l! / (a!^2 b!^2 (l-a-b)!) (N-a)_a (M-b)_b
        // (the accompanying article prints the prefactor as l!(l-1)!, which
        // reproduces B_l / l; cross-checking against the defining sum for
        // l <= 12 fixes the extra factor of l)
        for (int a = 0; a <= l; ++a) {
            for (int b = 0; a + b <= l; ++b) {
                Int fa = factorial((unsigned long)a), fb = factorial((unsigned long)b);
                Int den = fa * fa * fb * fb * factorial((unsigned long)(l - a - b));
                Rat coef = Rat(lf * lf) / Rat(den);
                MultiPoly t = rising(VN, -a, a) * rising(VM, -b, b);
                t *= coef;
                acc += t;
            }
        }
    }
    return acc;
}

namespace {

std::vector<MultiPoly> g_A, g_B, g_Bs;
std::mutex g_mu;

void ensure_families(int l) {
    if ((int)g_A.size() > l && (int)g_B.size() > l && (int)g_Bs.size() > l) return;
    int lmax = std::max({l, (int)g_A.size() - 1, 12});
    g_A = coeff_recursion(CoeffKind::A, lmax);
    g_B = coeff_recursion(CoeffKind::B, lmax);
    g_Bs.clear();
    MultiPoly np1 = MultiPoly::var(VN) + MultiPoly(1L);
    MultiPoly mp1 = MultiPoly::var(VM) + MultiPoly(1L);
    for (const auto& b : g_B) {
        MultiPoly t = poly_substitute(b, VN, np1);
        // M does not occur in np1, so sequential substitution is safe here
        t = poly_substitute(t, VM, mp1);
        g_Bs.push_back(t);
    }
}

} // namespace

const MultiPoly& coeff_A(int l) {
    std::lock_guard<std::mutex> lk(g_mu);
    ensure_families(l);
    return g_A[(size_t)l];
}
const MultiPoly& coeff_B(int l) {
    std::lock_guard<std::mutex> lk(g_mu);
    ensure_families(l);
    return g_B[(size_t)l];
}
const MultiPoly& coeff_B_shifted(int l) {
    std::lock_guard<std::mutex> lk(g_mu);
    ensure_families(l);
    return g_Bs[(size_t)l];
}

CoeffTableInt coeff_eval_int(int lmax, const Int& N0, const Int& M0) {
    CoeffTableInt t;
    Int d2 = (M0 - N0) * (M0 - N0); // invariant under the (N+1, M+1) shift
    auto runB = [&](const Int& n, const Int& m, std::vector<Int>& B) {
        B.assign((size_t)lmax + 1, Int(0));
        B[0] = 1;
        if (lmax >= 1) B[1] = n + m - 1;
        for (int l = 1; l + 1 <= lmax; ++l) {
            Int rhs = Int(2 * l + 1) * (n + m - 1) * B[(size_t)l];
            rhs += Int(l) * (Int(l * l) - d2) * B[(size_t)l - 1];
            B[(size_t)l + 1] = divexact(rhs, Int(l + 1));
        }
    };
    t.A.assign((size_t)lmax + 1, Int(0));
    t.A[0] = N0;
    if (lmax >= 1) t.A[1] = N0 * M0;
    for (int l = 1; l + 1 <= lmax; ++l) {
        Int rhs = Int(2 * l + 1) * (N0 + M0) * t.A[(size_t)l];
        rhs += Int(l - 1) * (Int(l * l) - d2) * t.A[(size_t)l - 1];
        t.A[(size_t)l + 1] = divexact(rhs, Int(l + 2));
    }
    runB(N0, M0, t.B);
    runB(N0 + 1, M0 + 1, t.Bs);
    return t;
}

CoeffTableAlpha coeff_eval_alpha(int lmax, const Int& N0) {
    CoeffTableAlpha t;
    // M = N0 + alpha, so M - N = alpha and (M-N)^2 = alpha^2
    ZPoly alpha;
    alpha.c = {Int(0), Int(1)};
    ZPoly n{N0};
    ZPoly m = n + alpha;
    ZPoly d2 = alpha * alpha;

    auto runB = [&](const ZPoly& nn, const ZPoly& mm, std::vector<ZPoly>& B) {
        B.assign((size_t)lmax + 1, ZPoly());
        B[0] = ZPoly(1);
        if (lmax >= 1) B[1] = nn + mm - ZPoly(1);
        for (int l = 1; l + 1 <= lmax; ++l) {
            ZPoly rhs = (nn + mm - ZPoly(1)) * B[(size_t)l];
            rhs *= Int(2 * l + 1);
            ZPoly low = (ZPoly(Int(l * l)) - d2) * B[(size_t)l - 1];
            low *= Int(l);
            rhs += low;
            // exact division by (l+1)
            for (auto& coef : rhs.c) coef = divexact(coef, Int(l + 1));
            B[(size_t)l + 1] = rhs;
        }
    };
    t.A.assign((size_t)lmax + 1, ZPoly());
    t.A[0] = n;
    if (lmax >= 1) t.A[1] = n * m;
    for (int l = 1; l + 1 <= lmax; ++l) {
        ZPoly rhs = (n + m) * t.A[(size_t)l];
        rhs *= Int(2 * l + 1);
        ZPoly low = (ZPoly(Int(l * l)) - d2) * t.A[(size_t)l - 1];
        low *= Int(l - 1);
        rhs += low;
        for (auto& coef : rhs.c) coef = divexact(coef, Int(l + 2));
        t.A[(size_t)l + 1] = rhs;
    }
    runB(n, m, t.B);
    runB(n + ZPoly(1), m + ZPoly(1), t.Bs);
    return t;
}

// ---------------------------------------------------------------------------
// scaled families

namespace {

NLaurent nl_zero() { return {}; }

void nl_add(NLaurent& a, const NLaurent& b) {
    for (const auto& [k, p] : b) {
        auto it = a.find(k);
        if (it == a.end()) a.emplace(k, p);
        else {
            it->second += p;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

NLaurent nl_scale(const NLaurent& a, const MultiPoly& cpoly, int nshift, const Rat& s = Rat(1)) {
    NLaurent r;
    for (const auto& [k, p] : a) {
        MultiPoly q = p * cpoly;
        q *= s;
        if (!q.is_zero()) r[k + nshift] = q;
    }
    return r;
}

// convert a polynomial in (N, c) into an NLaurent shifted by `shift`
NLaurent nl_from_poly(const MultiPoly& p, int shift) {
    NLaurent r;
    for (const auto& [e, coef] : p.terms) {
        if (e[VM] || e[VALPHA] || e[VLAMBDA] || e[VEPS])
            throw std::logic_error("nl_from_poly: unexpected variable");
        Expo ec{};
        ec[VC] = e[VC];
        int k = e[VN] + shift;
        auto& q = r[k];
        q.add_term(ec, coef);
        if (q.is_zero()) r.erase(k);
    }
    return r;
}

bool nl_eq(const NLaurent& a, const NLaurent& b) { return a == b; }

} // namespace

MultiPoly planar_A(int l) {
    MultiPoly a = poly_substitute(coeff_A(l), VM, MultiPoly::var(VC) * MultiPoly::var(VN));
    return a.coeff_of(VN, l + 1);
}

MultiPoly planar_B(int l) {
    MultiPoly b = poly_substitute(coeff_B(l), VM, MultiPoly::var(VC) * MultiPoly::var(VN));
    return b.coeff_of(VN, l);
}

ScaledDEF scaled_DEF(int lmax) {
    MultiPoly c = MultiPoly::var(VC);
    MultiPoly cN = c * MultiPoly::var(VN);
    MultiPoly cNp1 = cN + MultiPoly(1L);
    MultiPoly Np1 = MultiPoly::var(VN) + MultiPoly(1L);

    ScaledDEF def;
    for (int l = 0; l <= lmax; ++l) {
        // B_l(N, cN) and B_l(N+1, cN+1): rename N -> lambda first so the two
        // substitutions do not interfere
        MultiPoly b = coeff_B(l);
        MultiPoly b_cn = poly_substitute(b, VM, cN);
        MultiPoly tmp = poly_substitute(b, VN, MultiPoly::var(VLAMBDA));
        tmp = poly_substitute(tmp, VM, cNp1);
        MultiPoly b_shift = poly_substitute(tmp, VLAMBDA, Np1);

        MultiPoly a_cn = poly_substitute(coeff_A(l), VM, cN);

        def.D.push_back(nl_from_poly(b_shift - b_cn, -l));
        def.F.push_back(nl_from_poly(b_shift + b_cn, 1 - l));
        MultiPoly e = a_cn;
        e *= Rat(-2);
        def.E.push_back(nl_from_poly(e, -l));
    }

    // recursion route
    ScaledDEF rec;
    rec.D.resize((size_t)lmax + 1);
    rec.E.resize((size_t)lmax + 1);
    rec.F.resize((size_t)lmax + 1);
    MultiPoly cp1 = c + MultiPoly(1L);
    MultiPoly w2 = (c - MultiPoly(1L)) * (c - MultiPoly(1L)); // (c-1)^2
    auto unit = [](int npow, const MultiPoly& p) {
        NLaurent r;
        if (!p.is_zero()) r[npow] = p;
        return r;
    };
    rec.E[0] = unit(1, MultiPoly(Rat(-2)));
    rec.D[0] = nl_zero();
    rec.F[0] = unit(1, MultiPoly(Rat(2)));
    if (lmax >= 1) {
        MultiPoly m2c = c;
        m2c *= Rat(-2);
        rec.E[1] = unit(1, m2c);
        rec.D[1] = unit(-1, MultiPoly(Rat(2)));
        MultiPoly f1 = cp1;
        f1 *= Rat(2);
        rec.F[1] = unit(1, f1);
    }
    for (int l = 1; l + 1 <= lmax; ++l) {
        Rat inv_l1(1, l + 1), inv_l2(1, l + 2);
        MultiPoly l2 = MultiPoly(Rat((long)l * l));
        // common low-order factor (l^2 - N^2 (c-1)^2) as an operator on NLaurent:
        auto low_op = [&](const NLaurent& x, const Rat& mult) {
            NLaurent r = nl_scale(x, l2, 0, mult);
            NLaurent r2 = nl_scale(x, w2, 2, -mult);
            nl_add(r, r2);
            return r;
        };
        {
            // N^2 (l+2) E_{l+1} = N^2 (2l+1)(c+1) E_l + (l-1)(l^2 - (c-1)^2 N^2) E_{l-1}
            NLaurent rhs = nl_scale(rec.E[(size_t)l], cp1, 2, Rat(2 * l + 1));
            nl_add(rhs, low_op(rec.E[(size_t)l - 1], Rat(l - 1)));
            rec.E[(size_t)l + 1] = nl_scale(rhs, MultiPoly(1L), -2, inv_l2);
        }
        {
            // N^2 (l+1) D_{l+1} = N^2 (c+1)(2l+1) D_l + (2l+1) F_l + l(l^2 - N^2(c-1)^2) D_{l-1}
            NLaurent rhs = nl_scale(rec.D[(size_t)l], cp1, 2, Rat(2 * l + 1));
            nl_add(rhs, nl_scale(rec.F[(size_t)l], MultiPoly(1L), 0, Rat(2 * l + 1)));
            nl_add(rhs, low_op(rec.D[(size_t)l - 1], Rat(l)));
            rec.D[(size_t)l + 1] = nl_scale(rhs, MultiPoly(1L), -2, inv_l1);
        }
        {
            // N^2 (l+1) F_{l+1} = N^2 (c+1)(2l+1) F_l + N^2 (2l+1) D_l + l(l^2 - N^2(c-1)^2) F_{l-1}
            NLaurent rhs = nl_scale(rec.F[(size_t)l], cp1, 2, Rat(2 * l + 1));
            nl_add(rhs, nl_scale(rec.D[(size_t)l], MultiPoly(1L), 2, Rat(2 * l + 1)));
            nl_add(rhs, low_op(rec.F[(size_t)l - 1], Rat(l)));
            rec.F[(size_t)l + 1] = nl_scale(rhs, MultiPoly(1L), -2, inv_l1);
        }
    }
    for (int l = 0; l <= lmax; ++l) {
        if (!nl_eq(def.D[(size_t)l], rec.D[(size_t)l]) ||
            !nl_eq(def.E[(size_t)l], rec.E[(size_t)l]) ||
            !nl_eq(def.F[(size_t)l], rec.F[(size_t)l]))
            throw std::logic_error("scaled_DEF: definition and recursion disagree at l=" +
                                   std::to_string(l));
    }
    return def;
}

} // namespace lue
