// Connected-correlator engine.
//
// The generating identity: for nonzero integer powers k_1..k_r,
//   <prod_i tr X^{k_i}>_c = (-1)^{#neg+1} [prod_i x_i^{t_i}]
//       sum_{cyclic orders} (tr prod_j R_{s_j}(x_{v_j}) - delta_{r,2})
//                           / prod_j (x_{v_j} - x_{v_{j+1}})
// with t_i = -k_i - 1 for positive powers (expansion at infinity) and
// t_i = m_i - 1 for k_i = -m_i (expansion at zero). Every pair factor
// 1/(x_a - x_b) is expanded in a region fixed once per unordered pair
// (consistently across all cyclic orders, which is what makes the sum of
// pure-geometric terms cancel for r >= 3).
//
// The extraction runs as a transfer-matrix walk along the cycle. Values are
// dense integer polynomials in alpha at sampled integer N; the polynomial
// dependence on N (degree <= sum|k| + 2 - r) is recovered afterwards by exact
// Newton interpolation, with one extra sample kept aside as a consistency
// check. Denominator blocks a_l picked up from R_minus orders are tracked
// per path as interned multisets.

#include "lue/hahn.hpp"
#include "lue/oracles.hpp"
#include "lue/partition.hpp"
#include "lue/resolvent.hpp"
#include "lue/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lue {

namespace {

struct EdgeInfo {
    int left = 0, right = 0; // var indices; factor is 1/(x_left - x_right)
    bool big_left = true;
    int mcap = 0; // proven cap on the expansion order, margin included
};

inline int contrib_left(const EdgeInfo& e, int m) { return e.big_left ? -m - 1 : m; }
inline int contrib_right(const EdgeInfo& e, int m) { return e.big_left ? m : -m - 1; }

struct DenInterner {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> mults;
    std::vector<int> sums;
    std::map<std::pair<int, int>, int> push_memo;

    DenInterner() { intern({}); }

    int intern(std::vector<int> mult) {
        auto it = ids.find(mult);
        if (it != ids.end()) return it->second;
        int id = (int)mults.size();
        int s = 0;
        for (int l : mult) s += l;
        ids.emplace(mult, id);
        mults.push_back(std::move(mult));
        sums.push_back(s);
        return id;
    }

    // multiset union with one extra block a_l
    int push(int id, int l) {
        auto key = std::make_pair(id, l);
        auto it = push_memo.find(key);
        if (it != push_memo.end()) return it->second;
        std::vector<int> m = mults[(size_t)id];
        m.insert(std::upper_bound(m.begin(), m.end(), l), l);
        int nid = intern(std::move(m));
        push_memo.emplace(key, nid);
        return nid;
    }
};

// packed walk state
inline uint64_t pack_state(int a0, int a, int m_prev, int b, int plus_used, int den, int e11) {
    return (uint64_t)a0 | ((uint64_t)a << 1) | ((uint64_t)e11 << 2) |
           ((uint64_t)(m_prev + 1) << 3) |        // 9 bits
           ((uint64_t)(b + 2048) << 12) |         // 13 bits
           ((uint64_t)plus_used << 25) |          // 9 bits
           ((uint64_t)den << 34);
}

struct KeyData {
    std::vector<int> key;  // canonical
    std::vector<int> sg;   // +1 / -1 per var
    std::vector<int> mod;  // |k_i|
    std::vector<int> t;    // target exponents
    std::vector<int> rho;  // region permutation (identity by default)
    int r = 0, p = 0, q = 0;
    int Sk = 0, Mtot = 0;
    int margin = 0;

    std::vector<int> plus_cap; // per var (valid for plus vars)
    std::vector<int> mm_cap;   // per var (valid for minus vars)

    bool bigger(int u, int w) const { // does u dominate w?
        if (sg[(size_t)u] != sg[(size_t)w]) return sg[(size_t)u] > 0;
        if (sg[(size_t)u] > 0) return rho[(size_t)u] < rho[(size_t)w];
        return rho[(size_t)u] > rho[(size_t)w];
    }

    int pair_cap(int u, int w) const { // proven bound, no margin
        int big = bigger(u, w) ? u : w;
        return sg[(size_t)big] > 0 ? plus_cap[(size_t)big] : mm_cap[(size_t)big];
    }
};

KeyData prepare_key(const std::vector<int>& canon, const EngineOptions& opt) {
    KeyData kd;
    kd.key = canon;
    kd.r = (int)canon.size();
    kd.margin = std::max(opt.order_margin, 0);
    for (int k : canon) {
        int m = std::abs(k);
        kd.sg.push_back(k > 0 ? 1 : -1);
        kd.mod.push_back(m);
        // target exponent: -k-1 at infinity, |k|-1 at zero
        kd.t.push_back(k > 0 ? -k - 1 : m - 1);
        if (k > 0) { kd.Sk += m; kd.p++; }
        else { kd.Mtot += m; kd.q++; }
    }
    if (opt.region_permutation.empty()) {
        kd.rho.resize((size_t)kd.r);
        std::iota(kd.rho.begin(), kd.rho.end(), 0);
    } else {
        kd.rho = opt.region_permutation;
        std::vector<int> chk = kd.rho;
        std::sort(chk.begin(), chk.end());
        bool ok = (int)chk.size() == kd.r;
        for (int i = 0; ok && i < kd.r; ++i) ok = chk[(size_t)i] == i;
        if (!ok) throw std::invalid_argument("region_permutation must permute 0..r-1");
    }

    // plus caps: prefix sums along decreasing dominance (increasing rho)
    kd.plus_cap.assign((size_t)kd.r, -1);
    {
        std::vector<int> plus;
        for (int i = 0; i < kd.r; ++i)
            if (kd.sg[(size_t)i] > 0) plus.push_back(i);
        std::sort(plus.begin(), plus.end(),
                  [&](int a, int b) { return kd.rho[(size_t)a] < kd.rho[(size_t)b]; });
        int pref = 0;
        for (int u : plus) {
            pref += kd.mod[(size_t)u];
            kd.plus_cap[(size_t)u] = pref - 1;
        }
    }
    // minus-vs-minus caps by decreasing dominance (decreasing rho)
    kd.mm_cap.assign((size_t)kd.r, -1);
    {
        std::vector<int> minus;
        for (int i = 0; i < kd.r; ++i)
            if (kd.sg[(size_t)i] < 0) minus.push_back(i);
        std::sort(minus.begin(), minus.end(),
                  [&](int a, int b) { return kd.rho[(size_t)a] > kd.rho[(size_t)b]; });
        int best = kd.p > 0 ? kd.Sk - 1 : -1;
        for (int u : minus) {
            kd.mm_cap[(size_t)u] = kd.Mtot - kd.mod[(size_t)u] + best;
            best = std::max(best, kd.mm_cap[(size_t)u]);
        }
    }
    return kd;
}

struct EntryTables {
    // [l][row][col] values of the order-l resolvent matrix term
    std::vector<std::array<std::array<ZPoly, 2>, 2>> plusM, minusM;
};

EntryTables build_entries(int lmax_plus, int lmax_minus, const Int& N0) {
    CoeffTableAlpha tab = coeff_eval_alpha(std::max(lmax_plus, lmax_minus), N0);
    ZPoly nm; // N (N + alpha)
    nm.c = {N0 * N0, N0};
    EntryTables et;
    et.plusM.resize((size_t)lmax_plus + 1);
    et.minusM.resize((size_t)lmax_minus + 1);
    for (int l = 0; l <= lmax_plus; ++l) {
        ZPoly lA = tab.A[(size_t)l];
        lA *= Int(l);
        et.plusM[(size_t)l][0][0] = lA;
        et.plusM[(size_t)l][0][1] = tab.Bs[(size_t)l];
        et.plusM[(size_t)l][1][0] = nm * tab.B[(size_t)l];
        et.plusM[(size_t)l][1][0] *= Int(-1);
        et.plusM[(size_t)l][1][1] = lA;
        et.plusM[(size_t)l][1][1] *= Int(-1);
    }
    for (int l = 0; l <= lmax_minus; ++l) {
        ZPoly lA = tab.A[(size_t)l];
        lA *= Int(l + 1);
        et.minusM[(size_t)l][0][0] = lA;
        et.minusM[(size_t)l][0][1] = tab.Bs[(size_t)l];
        et.minusM[(size_t)l][0][1] *= Int(-1);
        et.minusM[(size_t)l][1][0] = nm * tab.B[(size_t)l];
        et.minusM[(size_t)l][1][1] = lA;
        et.minusM[(size_t)l][1][1] *= Int(-1);
    }
    return et;
}

using StateMap = std::unordered_map<uint64_t, ZPoly>;

// one cyclic order, one N sample; accumulates sign * path values per den id
void run_order(const KeyData& kd, const std::vector<int>& order, const EntryTables& et,
               DenInterner& dens, std::map<int, ZPoly>& out) {
    const int r = kd.r;
    std::vector<EdgeInfo> edges((size_t)r);
    int order_sign = 1;
    for (int j = 0; j < r; ++j) {
        EdgeInfo e;
        e.left = order[(size_t)j];
        e.right = order[(size_t)(j + 1) % (size_t)r];
        e.big_left = kd.bigger(e.left, e.right);
        e.mcap = kd.pair_cap(e.left, e.right) + kd.margin;
        if (!e.big_left) order_sign = -order_sign;
        edges[(size_t)j] = e;
    }

    // closing-edge deficit window
    const EdgeInfo& fin = edges[(size_t)(r - 1)];
    int b_lo, b_hi;
    if (fin.big_left) { b_lo = 0; b_hi = fin.mcap; } // m_fin = b
    else { b_lo = -fin.mcap - 1; b_hi = -1; }        // m_fin = -b-1

    const int v0 = order[0];
    const int sg0 = kd.sg[(size_t)v0], t0 = kd.t[(size_t)v0];
    const int plus_budget = kd.Sk + kd.margin;
    const int minus_budget = kd.Mtot + kd.margin;

    StateMap cur;
    // ---- step 0: choices at v0 and the order of edge 0
    auto seed = [&](int e0, bool is_e11, int l) {
        int pu = 0, den = 0;
        if (!is_e11) {
            if (sg0 > 0) pu = l + 1;
            else den = dens.push(0, l);
        }
        for (int m0 = 0; m0 <= edges[0].mcap; ++m0) {
            int b = t0 - e0 - contrib_left(edges[0], m0);
            if (b < b_lo || b > b_hi) continue;
            if (is_e11) {
                uint64_t st = pack_state(0, 0, m0, b, pu, den, 1);
                cur[st] += ZPoly(1);
            } else {
                const auto& M = sg0 > 0 ? et.plusM[(size_t)l] : et.minusM[(size_t)l];
                for (int a0 = 0; a0 < 2; ++a0)
                    for (int a1 = 0; a1 < 2; ++a1) {
                        if (M[(size_t)a0][(size_t)a1].is_zero()) continue;
                        uint64_t st = pack_state(a0, a1, m0, b, pu, den, 0);
                        cur[st] += M[(size_t)a0][(size_t)a1];
                    }
            }
        }
    };
    seed(0, true, 0);
    if (sg0 > 0)
        for (int l = 0; l + 1 <= plus_budget; ++l) seed(-l - 1, false, l);
    else
        for (int l = 0; l <= minus_budget; ++l) seed(l, false, l);

    // ---- middle steps
    for (int j = 1; j <= r - 2; ++j) {
        const int v = order[(size_t)j];
        const int sgv = kd.sg[(size_t)v], tv = kd.t[(size_t)v];
        const EdgeInfo& prev = edges[(size_t)(j - 1)];
        const EdgeInfo& next = edges[(size_t)j];
        StateMap nxt;
        for (auto& [st, val] : cur) {
            int a0 = (int)(st & 1), a = (int)((st >> 1) & 1), e11 = (int)((st >> 2) & 1);
            int m_prev = (int)((st >> 3) & 0x1ff) - 1;
            int b = (int)((st >> 12) & 0x1fff) - 2048;
            int pu = (int)((st >> 25) & 0x1ff);
            int den = (int)(st >> 34);
            int cr = contrib_right(prev, m_prev);
            for (int m = 0; m <= next.mcap; ++m) {
                int e = tv - cr - contrib_left(next, m);
                // E11 choice: only the (0,0) entry exists
                if (e == 0 && a == 0) {
                    uint64_t ns = pack_state(a0, 0, m, b, pu, den, e11);
                    nxt[ns] += val;
                }
                // matrix choice
                int l = -1;
                if (sgv > 0 && e <= -1) l = -e - 1;
                if (sgv < 0 && e >= 0) l = e;
                if (l < 0) continue;
                int npu = pu, nden = den;
                if (sgv > 0) {
                    npu = pu + l + 1;
                    if (npu > plus_budget) continue;
                } else {
                    if (dens.sums[(size_t)den] + l > minus_budget) continue;
                    nden = dens.push(den, l);
                }
                const auto& M = sgv > 0 ? et.plusM[(size_t)l] : et.minusM[(size_t)l];
                for (int a2 = 0; a2 < 2; ++a2) {
                    const ZPoly& ent = M[(size_t)a][(size_t)a2];
                    if (ent.is_zero()) continue;
                    uint64_t ns = pack_state(a0, a2, m, b, npu, nden, 0);
                    nxt[ns].add_mul(val, ent);
                }
            }
        }
        cur = std::move(nxt);
    }

    // ---- final step: close the cycle at v_{r-1}
    const int v = order[(size_t)(r - 1)];
    const int sgv = kd.sg[(size_t)v], tv = kd.t[(size_t)v];
    const EdgeInfo& prev = edges[(size_t)(r - 2)];
    for (auto& [st, val] : cur) {
        int a0 = (int)(st & 1), a = (int)((st >> 1) & 1), e11 = (int)((st >> 2) & 1);
        int m_prev = (int)((st >> 3) & 0x1ff) - 1;
        int b = (int)((st >> 12) & 0x1fff) - 2048;
        int pu = (int)((st >> 25) & 0x1ff);
        int den = (int)(st >> 34);
        int m_fin = fin.big_left ? b : -b - 1; // in range by construction
        int e = tv - contrib_right(prev, m_prev) - contrib_left(fin, m_fin);
        // E11 closes only through entry (a,a0) = (0,0), and not on all-E11 paths
        if (e == 0 && a == 0 && a0 == 0 && !e11) {
            ZPoly& slot = out[den];
            if (order_sign > 0) slot += val;
            else slot -= val;
        }
        int l = -1;
        if (sgv > 0 && e <= -1) l = -e - 1;
        if (sgv < 0 && e >= 0) l = e;
        if (l < 0) continue;
        int nden = den;
        if (sgv > 0) {
            if (pu + l + 1 > plus_budget) continue;
        } else {
            if (dens.sums[(size_t)den] + l > minus_budget) continue;
            nden = dens.push(den, l);
        }
        const auto& M = sgv > 0 ? et.plusM[(size_t)l] : et.minusM[(size_t)l];
        const ZPoly& ent = M[(size_t)a][(size_t)a0];
        if (ent.is_zero()) continue;
        ZPoly& slot = out[nden];
        if (order_sign > 0) slot.add_mul(val, ent);
        else { ZPoly t; t.add_mul(val, ent); slot -= t; }
    }
}

MultiPoly interpolate_samples(const std::vector<ZPoly>& Q, int S) {
    // Q[s-1] is the numerator at N = s, s = 1..S
    int adeg = -1;
    for (int s = 0; s < S; ++s) adeg = std::max(adeg, Q[(size_t)s].degree());
    std::vector<Rat> xs((size_t)S);
    for (int s = 0; s < S; ++s) xs[(size_t)s] = Rat(s + 1);
    MultiPoly num;
    for (int a = 0; a <= adeg; ++a) {
        std::vector<Rat> ys((size_t)S);
        bool any = false;
        for (int s = 0; s < S; ++s) {
            const auto& c = Q[(size_t)s].c;
            ys[(size_t)s] = a < (int)c.size() ? Rat(c[(size_t)a]) : Rat(0);
            any = any || sgn(ys[(size_t)s]) != 0;
        }
        if (!any) continue;
        std::vector<Rat> cN = newton_interpolate(xs, ys);
        for (size_t j = 0; j < cN.size(); ++j) {
            if (is_zero(cN[j])) continue;
            if (!is_integer(cN[j]))
                throw std::logic_error("correlator interpolation: non-integer coefficient");
            Expo e{};
            e[VN] = (int16_t)j;
            e[VALPHA] = (int16_t)a;
            num.add_term(e, cN[j]);
        }
    }
    return num;
}

CorrelatorValue engine_run(const std::vector<int>& canon, const EngineOptions& opt) {
    KeyData kd = prepare_key(canon, opt);
    const int r = kd.r;

    int lmax_plus = std::max(kd.Sk + kd.margin, 1);
    int lmax_minus = std::max(kd.Mtot + kd.margin, 1);

    int DN = kd.Sk + kd.Mtot + 3;
    for (int attempt = 0;; ++attempt) {
        int S = DN + 1;
        int total = S + (opt.verify_extra_sample ? 1 : 0);

        DenInterner dens;
        std::map<int, std::vector<ZPoly>> acc; // den id -> per-sample numerators
        for (int s = 1; s <= total; ++s) {
            EntryTables et = build_entries(lmax_plus, lmax_minus, Int(s));
            std::map<int, ZPoly> got;
            std::vector<int> order((size_t)r);
            std::iota(order.begin(), order.end(), 0);
            do {
                run_order(kd, order, et, dens, got);
            } while (std::next_permutation(order.begin() + 1, order.end()));
            for (auto& [id, z] : got) {
                auto& v = acc[id];
                v.resize((size_t)total);
                v[(size_t)(s - 1)] = std::move(z);
            }
        }

        // clear denominators over the least common multiple of the blocks
        LinFactors L;
        for (auto& [id, v] : acc) {
            BlockVec bl;
            for (int l : dens.mults[(size_t)id]) bl[l]++;
            L = linear_lcm(L, blocks_to_linear(bl));
        }
        std::vector<ZPoly> Q((size_t)total);
        for (auto& [id, v] : acc) {
            BlockVec bl;
            for (int l : dens.mults[(size_t)id]) bl[l]++;
            ZPoly cof = zpoly_from_linear(linear_div(L, blocks_to_linear(bl)));
            for (int s = 0; s < total; ++s)
                if (s < (int)v.size()) Q[(size_t)s].add_mul(v[(size_t)s], cof);
        }

        MultiPoly num = interpolate_samples(Q, S);
        bool ok = true;
        if (opt.verify_extra_sample) {
            MultiPoly pred = poly_substitute(num, VN, MultiPoly(Rat(S + 1)));
            ok = pred == Q[(size_t)S].to_multipoly();
        }
        if (ok) {
            if (kd.q % 2 == 0) num = -num; // overall (-1)^{q+1}
            BlockVec blocks;
            if (!linear_to_blocks(L, blocks))
                throw std::logic_error("correlator denominator is not a product of blocks");
            CorrelatorValue cv{std::move(num), std::move(blocks)};
            cv.reduce();
            return cv;
        }
        if (attempt >= 3)
            throw std::logic_error("correlator interpolation failed to stabilize; "
                                   "the sample count bound looks wrong");
        DN += 3;
    }
}

bool default_options(const EngineOptions& opt) {
    return opt.order_margin == 2 && opt.region_permutation.empty() && opt.verify_extra_sample;
}

} // namespace

CorrelatorValue connected_correlator(const std::vector<int>& key, const EngineOptions& opt) {
    std::vector<int> canon = canonical_key(key);
    if (canon.empty()) throw std::invalid_argument("empty correlator key");
    if (canon.size() == 1) return one_point(canon[0]);

    static std::map<std::vector<int>, CorrelatorValue> cache;
    bool use_cache = default_options(opt);
    if (use_cache) {
        auto it = cache.find(canon);
        if (it != cache.end()) return it->second;
    }
    CorrelatorValue cv = engine_run(canon, opt);
    if (use_cache) cache.emplace(canon, cv);
    return cv;
}

CorrelatorValue moments_from_connected(const std::vector<int>& key, const EngineOptions& opt) {
    int r = (int)key.size();
    if (r == 0) throw std::invalid_argument("empty correlator key");
    CorrelatorValue acc;
    for (auto& P : set_partitions(r)) {
        CorrelatorValue prod{MultiPoly(Rat(1)), {}};
        for (auto& block : P) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(key[(size_t)i]);
            prod = prod * connected_correlator(sub, opt);
        }
        acc += prod;
    }
    acc.reduce();
    return acc;
}

std::vector<std::pair<std::vector<int>, CorrelatorValue>> virasoro_residual(int n, int degree) {
    if (n < 0) throw std::invalid_argument("virasoro_residual: n must be >= 0");
    std::vector<std::pair<std::vector<int>, CorrelatorValue>> out;
    MultiPoly nmpoly = MultiPoly::var(VN) * (MultiPoly::var(VN) + MultiPoly::var(VALPHA));

    std::vector<std::vector<int>> keysets;
    for (int d = 0; d <= degree; ++d)
        for (auto& part : partitions_of(d)) keysets.push_back(part);

    for (auto& K : keysets) {
        CorrelatorValue res;
        auto add = [&](const Rat& coef, std::vector<int> kk) {
            CorrelatorValue c = connected_correlator(kk);
            c.num *= coef;
            res += c;
        };
        // sum_i k_i <K with k_i -> k_i + n>
        for (size_t i = 0; i < K.size(); ++i) {
            std::vector<int> kk = K;
            kk[i] += n;
            add(Rat(K[i]), kk);
        }
        if (n == 0 && K.empty()) res += CorrelatorValue{nmpoly, {}};
        // -<K + {n+1}>
        {
            std::vector<int> kk = K;
            kk.push_back(n + 1);
            add(Rat(-1), kk);
        }
        if (n >= 1) {
            // (2N + alpha) <K + {n}>
            std::vector<int> kk = K;
            kk.push_back(n);
            CorrelatorValue c = connected_correlator(kk);
            MultiPoly pref = MultiPoly::var(VN, 1, Rat(2)) + MultiPoly::var(VALPHA);
            c.num = c.num * pref;
            res += c;
            // second-derivative terms
            for (int k = 1; k <= n - 1; ++k) {
                std::vector<int> kk2 = K;
                kk2.push_back(k);
                kk2.push_back(n - k);
                add(Rat(1), kk2);
                // connected splittings over subsets of K's slots
                int sz = (int)K.size();
                for (int mask = 0; mask < (1 << sz); ++mask) {
                    std::vector<int> left{k}, right{n - k};
                    for (int i = 0; i < sz; ++i)
                        ((mask >> i) & 1 ? left : right).push_back(K[(size_t)i]);
                    CorrelatorValue prod =
                        connected_correlator(left) * connected_correlator(right);
                    res += prod;
                }
            }
        }
        res.reduce();
        out.push_back({K, std::move(res)});
    }
    return out;
}

MultiPoly mgue_factorization_residual(const std::vector<int>& key) {
    for (int k : key)
        if (k <= 0) throw std::invalid_argument("mgue residual: key must be positive");
    std::vector<int> doubled;
    int sk = 0;
    for (int k : key) { doubled.push_back(2 * k); sk += k; }
    MultiPoly gue = gue_even_oracle(doubled);
    gue = poly_substitute(gue, VN, MultiPoly::var(VN, 1, Rat(2))); // size 2N

    CorrelatorValue c = connected_correlator(key);
    if (!c.den.empty()) throw std::logic_error("positive-key correlator grew a denominator");
    MultiPoly plus_half = poly_substitute(c.num, VALPHA, MultiPoly(Rat(1, 2)));
    MultiPoly minus_half = poly_substitute(c.num, VALPHA, MultiPoly(Rat(-1, 2)));
    MultiPoly lue = plus_half + minus_half;
    Rat scale(Int(1) << sk);
    lue *= scale;
    return gue - lue;
}

} // namespace lue
