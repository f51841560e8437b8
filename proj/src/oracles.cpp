#include "lue/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lue {

namespace {

int env_cap(const char* name, int dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    int x = std::atoi(v);
    return x > 0 ? x : dflt;
}

std::vector<int> cycle_type(const std::vector<int>& p) {
    int d = (int)p.size();
    std::vector<char> seen(d, 0);
    std::vector<int> type;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = 1; j = p[j]; ++len; }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { while (up[x] != x) x = up[x] = up[up[x]]; return x; }
    void join(int a, int b) { up[find(a)] = find(b); }
    int comps() {
        int c = 0;
        for (int i = 0; i < (int)up.size(); ++i) c += find(i) == i;
        return c;
    }
};

} // namespace

int oracle_max_degree() { return env_cap("LUE_ORACLE_MAX_D", 6); }
int oracle_max_gue_points() { return env_cap("LUE_ORACLE_MAX_GUE", 12); }

const MonotoneCounts& monotone_counts(const std::vector<int>& mu_in, int rmax,
                                      MonotoneFlavor flavor) {
    std::vector<int> mu = sorted_parts(mu_in);
    int d = 0;
    for (int x : mu) d += x;
    if (d > oracle_max_degree())
        throw std::domain_error("monotone_counts: degree " + std::to_string(d) +
                                " exceeds guardrail (set LUE_ORACLE_MAX_D to raise)");

    static std::map<std::pair<std::vector<int>, int>, MonotoneCounts> memo;
    auto& slot = memo[{mu, (int)flavor}];
    if (slot.rmax >= rmax) return slot;

    MonotoneCounts out;
    out.rmax = rmax;
    out.by_r.assign((size_t)rmax + 1, {});

    // all alpha of cycle type mu
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> alphas;
    do {
        if (cycle_type(perm) == mu) alphas.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<int, int>> taus;
    for (auto& alpha : alphas) {
        std::vector<int> pi = alpha; // alpha composed with the taus so far
        std::function<void(int, int)> walk = [&](int depth, int lastb) {
            // classify the tuple ending here
            Dsu dsu(d);
            for (int i = 0; i < d; ++i) dsu.join(i, alpha[i]);
            for (auto [a, b] : taus) dsu.join(a, b);
            if (dsu.comps() == 1) out.by_r[(size_t)depth][cycle_type(pi)] += 1;
            if (depth == rmax) return;
            int bmin = (flavor == MonotoneFlavor::Strict) ? lastb + 1 : lastb;
            for (int b = std::max(bmin, 1); b < d; ++b) {
                for (int a = 0; a < b; ++a) {
                    std::swap(pi[a], pi[b]); // right-multiply by (a b)
                    taus.push_back({a, b});
                    walk(depth + 1, b);
                    taus.pop_back();
                    std::swap(pi[a], pi[b]);
                }
            }
        };
        walk(0, (flavor == MonotoneFlavor::Strict) ? 0 : 1);
    }
    slot = std::move(out);
    return slot;
}

Int hurwitz_brute(const std::vector<int>& mu, const std::vector<int>& nu, int g,
                  MonotoneFlavor flavor) {
    std::vector<int> m = sorted_parts(mu), n = sorted_parts(nu);
    int dm = 0, dn = 0;
    for (int x : m) dm += x;
    for (int x : n) dn += x;
    if (dm != dn) throw std::invalid_argument("hurwitz_brute: |mu| != |nu|");
    if (g < 0) return 0;
    int r = (int)m.size() + (int)n.size() + 2 * g - 2;
    if (r < 0) return 0;
    const auto& table = monotone_counts(m, r, flavor);
    auto it = table.by_r[(size_t)r].find(n);
    return it == table.by_r[(size_t)r].end() ? Int(0) : it->second;
}

Int hurwitz_weighted(const std::vector<int>& mu, int s, int g, MonotoneFlavor flavor) {
    std::vector<int> m = sorted_parts(mu);
    if (s < 1) throw std::invalid_argument("hurwitz_weighted: s must be >= 1");
    int d = 0;
    for (int x : m) d += x;
    int r = (int)m.size() + s + 2 * g - 2;
    if (r < 0 || s > d) return 0;
    const auto& table = monotone_counts(m, r, flavor);
    Int total = 0;
    for (auto& nu : partitions_of_length(d, s)) {
        auto it = table.by_r[(size_t)r].find(nu);
        if (it != table.by_r[(size_t)r].end()) total += it->second;
    }
    Rat h = Rat(zmu(m) * total) / Rat(factorial((unsigned long)d));
    if (!is_integer(h)) throw std::logic_error("hurwitz_weighted: non-integer value");
    return h.get_num();
}

// --------------------------------------------------------------------------
// eigenvalue-integral oracle

namespace {

using ShiftMap = std::map<int, int>; // shift s -> exponent of (alpha + s)

// Gamma(alpha+1+e)/Gamma(alpha+1) as linear factors (alpha+s)^{+-1}
void add_gamma_ratio(ShiftMap& m, int e) {
    if (e >= 0)
        for (int s = 1; s <= e; ++s) m[s] += 1;
    else
        for (int s = e + 1; s <= 0; ++s) m[s] -= 1;
}

MultiPoly alpha_plus(int s) {
    MultiPoly p = MultiPoly::var(VALPHA);
    p += MultiPoly(Rat(s));
    return p;
}

// sum of signed products of linear factors, pulled over a common denominator
UniRatFn assemble(const std::vector<std::pair<int, ShiftMap>>& terms) {
    ShiftMap D; // required denominator exponent per shift
    for (auto& [sg, m] : terms)
        for (auto [s, e] : m)
            if (e < 0) D[s] = std::max(D[s], -e);
    MultiPoly num;
    for (auto& [sg, m] : terms) {
        MultiPoly t{Rat(sg)};
        ShiftMap full = D;
        for (auto [s, e] : m) full[s] += e;
        for (auto [s, e] : full) {
            if (e < 0) throw std::logic_error("assemble: exponent bookkeeping broke");
            if (e > 0) t *= alpha_plus(s).pow((unsigned)e);
        }
        num += t;
    }
    MultiPoly den{Rat(1)};
    for (auto [s, e] : D) den *= alpha_plus(s).pow((unsigned)e);
    return {std::move(num), std::move(den)};
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int d = (int)p.size();
    std::vector<char> seen(d, 0);
    int sign = 1;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = 1; j = p[j]; ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace

UniRatFn lue_eigenvalue_moment(const std::vector<int>& key, int N_small) {
    if (N_small < 1 || N_small > 3)
        throw std::invalid_argument("lue_eigenvalue_moment: N must be 1, 2 or 3");
    for (int k : key)
        if (k == 0) throw std::invalid_argument("lue_eigenvalue_moment: zero power");
    int N = N_small, r = (int)key.size();
    auto perms = all_perms(N);

    std::vector<std::pair<int, ShiftMap>> terms, zterms;
    std::vector<int> assign((size_t)r, 0);
    for (auto& sigma : perms) {
        for (auto& tau : perms) {
            int sg = perm_sign(sigma) * perm_sign(tau);
            // normalization term (no trace insertions)
            {
                ShiftMap m;
                for (int i = 0; i < N; ++i) add_gamma_ratio(m, sigma[i] + tau[i]);
                zterms.push_back({sg, std::move(m)});
            }
            // all ways to attach each trace factor to an eigenvalue
            std::fill(assign.begin(), assign.end(), 0);
            while (true) {
                ShiftMap m;
                for (int i = 0; i < N; ++i) {
                    int e = sigma[i] + tau[i];
                    for (int j = 0; j < r; ++j)
                        if (assign[(size_t)j] == i) e += key[(size_t)j];
                    add_gamma_ratio(m, e);
                }
                terms.push_back({sg, std::move(m)});
                int j = 0;
                while (j < r && ++assign[(size_t)j] == N) assign[(size_t)j++] = 0;
                if (j == r) break;
            }
        }
    }
    UniRatFn momsum = assemble(terms);
    UniRatFn znorm = assemble(zterms);
    if (znorm.den != MultiPoly(Rat(1)))
        throw std::logic_error("lue_eigenvalue_moment: normalization must be polynomial");
    return {momsum.num, momsum.den * znorm.num};
}

namespace {

UniRatFn rf_mul(const UniRatFn& a, const UniRatFn& b) { return {a.num * b.num, a.den * b.den}; }

UniRatFn rf_add(const UniRatFn& a, const UniRatFn& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

} // namespace

UniRatFn lue_eigenvalue_oracle(const std::vector<int>& key, int N_small) {
    int r = (int)key.size();
    if (r == 0) throw std::invalid_argument("lue_eigenvalue_oracle: empty key");
    UniRatFn acc{MultiPoly(), MultiPoly(Rat(1))};
    for (auto& P : set_partitions(r)) {
        UniRatFn prod{MultiPoly(Rat(1)), MultiPoly(Rat(1))};
        for (auto& block : P) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(key[(size_t)i]);
            prod = rf_mul(prod, lue_eigenvalue_moment(sub, N_small));
        }
        Rat coef = Rat(factorial((unsigned long)(P.size() - 1)));
        if (P.size() % 2 == 0) coef = -coef;
        prod.num *= coef;
        acc = rf_add(acc, prod);
    }
    return acc;
}

// --------------------------------------------------------------------------
// GUE Wick pairings

MultiPoly gue_moment(const std::vector<int>& powers) {
    int P = 0;
    for (int p : powers) {
        if (p <= 0) throw std::invalid_argument("gue_moment: powers must be positive");
        P += p;
    }
    if (P > oracle_max_gue_points())
        throw std::domain_error("gue_moment: " + std::to_string(P) +
                                " points exceeds guardrail (set LUE_ORACLE_MAX_GUE to raise)");
    MultiPoly total;
    if (P % 2) return total;

    // successor permutation of the trace cycles
    std::vector<int> gam(P);
    int base = 0;
    for (int p : powers) {
        for (int i = 0; i < p; ++i) gam[(size_t)(base + i)] = base + (i + 1) % p;
        base += p;
    }

    std::vector<int> match((size_t)P, -1);
    std::function<void()> rec = [&]() {
        int a = -1;
        for (int i = 0; i < P; ++i)
            if (match[(size_t)i] < 0) { a = i; break; }
        if (a < 0) {
            // count cycles of x -> gam[match[x]]
            std::vector<char> seen((size_t)P, 0);
            int cycles = 0;
            for (int i = 0; i < P; ++i) {
                if (seen[(size_t)i]) continue;
                ++cycles;
                int j = i;
                while (!seen[(size_t)j]) { seen[(size_t)j] = 1; j = gam[(size_t)match[(size_t)j]]; }
            }
            total += MultiPoly::var(VN, cycles);
            return;
        }
        for (int b = a + 1; b < P; ++b) {
            if (match[(size_t)b] >= 0) continue;
            match[(size_t)a] = b;
            match[(size_t)b] = a;
            rec();
            match[(size_t)a] = match[(size_t)b] = -1;
        }
    };
    rec();
    return total;
}

MultiPoly gue_even_oracle(const std::vector<int>& powers) {
    for (int p : powers)
        if (p <= 0 || p % 2) throw std::invalid_argument("gue_even_oracle: powers must be even");
    int r = (int)powers.size();
    MultiPoly acc;
    for (auto& P : set_partitions(r)) {
        MultiPoly prod{Rat(1)};
        for (auto& block : P) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(powers[(size_t)i]);
            prod *= gue_moment(sub);
        }
        Rat coef = Rat(factorial((unsigned long)(P.size() - 1)));
        if (P.size() % 2 == 0) coef = -coef;
        prod *= coef;
        acc += prod;
    }
    return acc;
}

} // namespace lue
