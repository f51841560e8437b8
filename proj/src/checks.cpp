#include "lue/checks.hpp"

#include "lue/hahn.hpp"
#include "lue/hodge.hpp"
#include "lue/resolvent.hpp"
#include "lue/topo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lue {

namespace {

std::string key_str(const std::vector<int>& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
    return s + ")";
}

// append a counterexample line, keeping the detail bounded
void note_failure(CheckItem& item, const std::string& line, int cap = 12) {
    item.ok = false;
    int lines = (int)std::count(item.detail.begin(), item.detail.end(), '\n') + 1;
    if (item.detail.empty()) item.detail = line;
    else if (lines < cap) item.detail += "\n" + line;
    else if (lines == cap) item.detail += "\n...";
}

CheckItem make_item(const std::string& name) {
    CheckItem it;
    it.name = name;
    it.ok = true;
    return it;
}

} // namespace

std::vector<std::vector<int>> partitions_up_to(int wmax) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (!cur.empty()) out.push_back(cur);
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, wmax, wmax);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int wa = std::accumulate(a.begin(), a.end(), 0);
        int wb = std::accumulate(b.begin(), b.end(), 0);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

std::vector<std::vector<int>> signed_keys_up_to(int wmax) {
    std::vector<std::vector<int>> out;
    for (const auto& mu : partitions_up_to(wmax)) {
        // group equal parts, then choose how many of each group point down
        std::vector<std::pair<int, int>> groups; // part -> multiplicity
        for (int p : mu) {
            if (!groups.empty() && groups.back().first == p) groups.back().second++;
            else groups.emplace_back(p, 1);
        }
        std::vector<int> neg(groups.size(), 0);
        auto emit = [&]() {
            std::vector<int> key;
            for (size_t i = 0; i < groups.size(); ++i) {
                for (int r = 0; r < groups[i].second - neg[i]; ++r) key.push_back(groups[i].first);
                for (int r = 0; r < neg[i]; ++r) key.push_back(-groups[i].first);
            }
            out.push_back(canonical_key(key));
        };
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == groups.size()) { emit(); return; }
            for (neg[i] = 0; neg[i] <= groups[i].second; ++neg[i]) self(self, i + 1);
            neg[i] = 0;
        };
        rec(rec, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

CheckReport suite_recursions(const CheckOptions& opt) {
    CheckReport rep{"recursions", {}};
    const int lmax = opt.recursion_lmax;

    for (CoeffKind kind : {CoeffKind::A, CoeffKind::B}) {
        CheckItem it = make_item(kind == CoeffKind::A ? "A: sum = recursion = integer form"
                                                      : "B: sum = recursion = integer form");
        auto rec = coeff_recursion(kind, lmax);
        for (int l = 0; l <= lmax; ++l) {
            MultiPoly direct = kind == CoeffKind::A ? coeff_A_sum(l) : coeff_B_sum(l);
            MultiPoly integral = coeff_integer_form(kind, l);
            if (direct != rec[(size_t)l] || direct != integral)
                note_failure(it, "routes disagree at l=" + std::to_string(l));
            else if (!integral.is_integral())
                note_failure(it, "non-integer coefficient at l=" + std::to_string(l));
        }
        if (it.ok) it.detail = "three routes, l <= " + std::to_string(lmax);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("bridge l(l+1) A_l = N M (B_l(N+1,M+1) - B_l(N,M))");
        MultiPoly NM = MultiPoly::var(VN) * MultiPoly::var(VM);
        for (int l = 0; l <= lmax; ++l) {
            MultiPoly lhs = coeff_A(l) * Rat((long)l * (l + 1));
            MultiPoly rhs = NM * (coeff_B_shifted(l) - coeff_B(l));
            if (lhs != rhs) note_failure(it, "fails at l=" + std::to_string(l));
        }
        if (it.ok) it.detail = "l <= " + std::to_string(lmax);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("scaled D/E/F: definitions = coupled recursions");
        try {
            scaled_DEF(lmax);
            it.detail = "l <= " + std::to_string(lmax);
        } catch (const std::logic_error& e) {
            note_failure(it, e.what());
        }
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

using RSeries = TruncatedSeries<CorrelatorValue>;

// series identically zero on its guaranteed window? (arithmetic clips stored
// support to the window, so any stored survivor is a genuine counterexample)
bool series_known_zero(const RSeries& s, long& verified_span) {
    const auto& w = s.win[0];
    long lo = std::max(w.known_lo, w.hard_lo);
    long hi = std::min(w.known_hi, w.hard_hi);
    verified_span = hi >= lo ? hi - lo + 1 : 0;
    for (const auto& [e, c] : s.sup)
        if (!c.is_zero() && s.guaranteed(e)) return false;
    return true;
}

} // namespace

CheckReport suite_projector(const CheckOptions& opt) {
    CheckReport rep{"projector", {}};
    const int lmax = opt.projector_lmax;

    for (int sign : {+1, -1}) {
        const std::string side = sign > 0 ? "R+ (x -> oo)" : "R- (x -> 0)";
        ResolventSeries R = build_resolvent(sign, lmax);

        CheckItem sq = make_item(side + ": R^2 = R on the guaranteed window");
        long span_min = kPosInf;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                RSeries prod = R.e[(size_t)i][0] * R.e[0][(size_t)j] +
                               R.e[(size_t)i][1] * R.e[1][(size_t)j];
                RSeries diff = prod - R.e[(size_t)i][(size_t)j];
                long span = 0;
                if (!series_known_zero(diff, span))
                    note_failure(sq, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") has a nonzero guaranteed coefficient");
                span_min = std::min(span_min, span);
            }
        if (sq.ok)
            sq.detail = "orders 0.." + std::to_string(lmax) + ", window of " +
                        std::to_string(span_min) + " coefficients per entry";
        rep.items.push_back(std::move(sq));

        CheckItem tr = make_item(side + ": tr R = 1");
        RSeries trace = R.e[0][0] + R.e[1][1];
        RSeries one = RSeries::constant(1, CorrelatorValue(1));
        long span = 0;
        if (!series_known_zero(trace - one, span)) note_failure(tr, "trace deviates from 1");
        else tr.detail = span > (kPosInf >> 2) ? "entire series"
                                               : "window of " + std::to_string(span) + " coefficients";
        rep.items.push_back(std::move(tr));
    }

    {
        CheckItem it = make_item("R- entry (1,1) at x^0 equals 1 + N/alpha");
        ResolventSeries R = build_resolvent(-1, 2);
        CorrelatorValue got = R.e[0][0].coeff({0});
        CorrelatorValue want(MultiPoly::var(VALPHA) + MultiPoly::var(VN), BlockVec{{0, 1}});
        if (!got.equals(want)) note_failure(it, "got " + got.to_string());
        else it.detail = "exact";
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_symmetry(const CheckOptions& opt) {
    CheckReport rep{"symmetry", {}};

    {
        CheckItem it = make_item("positive correlators invariant under (N,alpha) -> (N+alpha,-alpha)");
        int count = 0;
        for (const auto& key : partitions_up_to(opt.involution_sum)) {
            CorrelatorValue v = connected_correlator(key);
            if (!v.den.empty()) {
                note_failure(it, key_str(key) + ": unexpected denominator");
                continue;
            }
            // route the swap through the otherwise unused lambda slot: first
            // N -> N + lambda and alpha -> -lambda, then lambda -> alpha
            MultiPoly sub = poly_substitute(v.num, VN, MultiPoly::var(VN) + MultiPoly::var(VLAMBDA));
            sub = poly_substitute(sub, VALPHA, MultiPoly::var(VLAMBDA, 1, Rat(-1)));
            sub = poly_substitute(sub, VLAMBDA, MultiPoly::var(VALPHA));
            if (sub != v.num) note_failure(it, key_str(key) + ": not invariant");
            ++count;
        }
        if (it.ok)
            it.detail = std::to_string(count) + " keys, sum <= " + std::to_string(opt.involution_sum);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("strict tables: H_g(mu;s) = H_g(mu; 2-2g+|mu|-len-s)");
        int tables = 0;
        for (const auto& mu : partitions_up_to(opt.symmetry_weight)) {
            HurwitzTable t = expand_strict(mu, opt.symmetry_gmax);
            std::string msg;
            if (!check_symmetry(t, &msg)) note_failure(it, "mu=" + key_str(mu) + ": " + msg);
            ++tables;
        }
        if (it.ok)
            it.detail = std::to_string(tables) + " tables, |mu| <= " +
                        std::to_string(opt.symmetry_weight) + ", g <= " +
                        std::to_string(opt.symmetry_gmax);
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_virasoro(const CheckOptions& opt) {
    CheckReport rep{"virasoro", {}};
    for (int n = 0; n <= opt.virasoro_nmax; ++n) {
        CheckItem it = make_item("L_" + std::to_string(n) + " residuals vanish");
        auto res = virasoro_residual(n, opt.virasoro_degree);
        for (const auto& [key, v] : res)
            if (!v.is_zero())
                note_failure(it, "coefficient of t-monomial " + key_str(key) + " is " + v.to_string());
        if (it.ok)
            it.detail = std::to_string(res.size()) + " coefficients, weighted degree <= " +
                        std::to_string(opt.virasoro_degree);
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_parity(const CheckOptions& opt) {
    CheckReport rep{"parity", {}};
    const int lmax = opt.parity_lmax;
    ScaledDEF def = scaled_DEF(lmax);

    auto run = [&](const char* nm, const std::vector<NLaurent>& fam, int top) {
        CheckItem it = make_item(std::string(nm) + ": only odd powers of N, top order N^" +
                                 (top < 0 ? std::to_string(top) : "+" + std::to_string(top)));
        for (int l = 0; l <= lmax; ++l)
            for (const auto& [p, q] : fam[(size_t)l]) {
                if (q.is_zero()) continue;
                if ((p % 2 + 2) % 2 == 0)
                    note_failure(it, std::string(nm) + "_" + std::to_string(l) +
                                         " has even N-power " + std::to_string(p));
                if (p > top)
                    note_failure(it, std::string(nm) + "_" + std::to_string(l) +
                                         " exceeds the stated order with N^" + std::to_string(p));
            }
        if (it.ok) it.detail = "l <= " + std::to_string(lmax);
        rep.items.push_back(std::move(it));
    };
    run("D", def.D, -1);
    run("E", def.E, +1);
    run("F", def.F, +1);
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_integrality(const CheckOptions& opt) {
    CheckReport rep{"integrality", {}};

    {
        CheckItem it = make_item("N^-2 structure with coefficients in Z[c,(c-1)^-1]");
        int count = 0;
        for (const auto& key : signed_keys_up_to(opt.integrality_sum)) {
            std::string msg;
            if (!check_integrality(key, opt.integrality_jmax, &msg))
                note_failure(it, key_str(key) + ": " + msg);
            ++count;
        }
        if (it.ok)
            it.detail = std::to_string(count) + " keys with sum|k| <= " +
                        std::to_string(opt.integrality_sum) + ", rows down to N^-" +
                        std::to_string(2 * opt.integrality_jmax);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("weak tables nonnegative, positive at c = 2");
        int tables = 0;
        for (const auto& mu : partitions_up_to(opt.positivity_weight)) {
            HurwitzTable t = expand_weak(mu, opt.positivity_gmax);
            bool genus0_positive = false;
            for (int g = 0; g < (int)t.entries.size(); ++g)
                for (int s = 1; s <= t.smax; ++s) {
                    const Int& v = t.at(g, s);
                    if (sgn(v) < 0)
                        note_failure(it, "mu=" + key_str(mu) + " g=" + std::to_string(g) +
                                             " s=" + std::to_string(s) + ": negative entry " +
                                             lue::to_string(v));
                    if (g == 0 && sgn(v) > 0) genus0_positive = true;
                }
            if (!genus0_positive)
                note_failure(it, "mu=" + key_str(mu) + ": genus-0 row sums to zero at c=2");
            ++tables;
        }
        if (it.ok)
            it.detail = std::to_string(tables) + " tables, |mu| <= " +
                        std::to_string(opt.positivity_weight) + ", g <= " +
                        std::to_string(opt.positivity_gmax);
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string wlaur_diff_str(int n, const WLaur& want, const WLaur& got) {
    return "N^" + std::to_string(n) + " row: expected " + want.to_string() + ", got " +
           got.to_string();
}

} // namespace

CheckReport suite_fixtures(const CheckOptions&) {
    CheckReport rep{"fixtures", {}};

    {
        CheckItem it = make_item("correlator tables");
        auto fixtures = load_correlator_fixtures();
        int errata = 0;
        for (const auto& f : fixtures) {
            CorrelatorValue engine = connected_correlator(f.key);
            if (!engine.equals(f.corrected()))
                note_failure(it, key_str(f.key) + ": expected " + f.corrected().to_string() +
                                     ", got " + engine.to_string());
            if (f.has_erratum()) {
                ++errata;
                // the documented discrepancy must really be there
                if (engine.equals(f.printed))
                    note_failure(it, key_str(f.key) + ": flagged erratum not observed");
            }
        }
        if (it.ok)
            it.detail = std::to_string(fixtures.size()) + " entries (" +
                        std::to_string(errata) + " with a documented erratum)";
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("topological-expansion tables");
        auto fixtures = load_expansion_fixtures();
        int errata = 0;
        for (const auto& f : fixtures) {
            ScaledExpansion e = scaled_correlator(f.key, f.floor);
            if (e.exact != f.exact)
                note_failure(it, key_str(f.key) + ": exactness flag mismatch");
            std::map<int, WLaur> want = f.corrected();
            errata += f.has_errata();
            int hi = f.floor;
            for (const auto& [n, row] : want) hi = std::max(hi, n);
            for (const auto& [n, row] : e.rows) hi = std::max(hi, n);
            for (int n = f.floor; n <= hi; ++n) {
                WLaur engine_row = e.rows.count(n) ? e.rows.at(n) : WLaur();
                WLaur want_row = want.count(n) ? want.at(n) : WLaur();
                if (!(engine_row == want_row))
                    note_failure(it, key_str(f.key) + " " + wlaur_diff_str(n, want_row, engine_row));
            }
        }
        if (it.ok)
            it.detail = std::to_string(fixtures.size()) + " expansions (" +
                        std::to_string(errata) + " with documented errata)";
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("strict and weak Hurwitz tables");
        auto fixtures = load_hurwitz_fixtures();
        // group by (flavor, mu) so each table is computed once
        for (MonotoneFlavor flavor : {MonotoneFlavor::Strict, MonotoneFlavor::Weak}) {
            for (const auto& mu : hurwitz_fixture_mus(fixtures, flavor)) {
                int gmax = 0, smax = 0;
                for (const auto& f : fixtures)
                    if (f.flavor == flavor && f.mu == mu) {
                        gmax = std::max(gmax, f.g);
                        smax = std::max(smax, f.s);
                    }
                HurwitzTable t = flavor == MonotoneFlavor::Strict
                                     ? expand_strict(mu, gmax)
                                     : expand_weak(mu, gmax, smax);
                for (const auto& f : fixtures) {
                    if (f.flavor != flavor || f.mu != mu) continue;
                    Int got = t.at(f.g, f.s);
                    if (got != f.value)
                        note_failure(it, std::string("(") +
                                             (flavor == MonotoneFlavor::Strict ? "strict" : "weak") +
                                             ", mu=" + key_str(f.mu) + ", g=" + std::to_string(f.g) +
                                             ", s=" + std::to_string(f.s) + ", expected " +
                                             lue::to_string(f.value) + ", got " +
                                             lue::to_string(got) + ")");
                }
            }
        }
        if (it.ok) it.detail = std::to_string(fixtures.size()) + " entries";
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_factorization(const CheckOptions&) {
    CheckReport rep{"factorization", {}};
    CheckItem it = make_item("even-coupling GUE = 2^{sum k} (alpha=-1/2 plus alpha=+1/2) Laguerre");
    const std::vector<std::vector<int>> keys = {{1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}};
    for (const auto& key : keys) {
        MultiPoly res = mgue_factorization_residual(key);
        if (!res.is_zero())
            note_failure(it, key_str(key) + ": residual " + poly_to_string(res));
    }
    if (it.ok) it.detail = std::to_string(keys.size()) + " keys";
    rep.items.push_back(std::move(it));
    return rep;
}

// ---------------------------------------------------------------------------

CheckReport suite_hodge(const CheckOptions& opt) {
    CheckReport rep{"hodge", {}};

    {
        CheckItem it = make_item("eps-series even, orders >= -2");
        int count = 0;
        for (const auto& mu : partitions_up_to(opt.hodge_weight)) {
            try {
                HodgeSeries h = hodge_rhs(mu, opt.hodge_gmax);
                for (const auto& [p, q] : h)
                    if (!q.is_zero() && (p % 2 != 0 || p < -2))
                        note_failure(it, "mu=" + key_str(mu) + ": power eps^" + std::to_string(p));
            } catch (const std::logic_error& e) {
                note_failure(it, "mu=" + key_str(mu) + ": " + e.what());
            }
            ++count;
        }
        if (it.ok)
            it.detail = std::to_string(count) + " partitions, |mu| <= " +
                        std::to_string(opt.hodge_weight);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("genus 0, one part: closed form and (lambda-1) coefficients");
        for (int k = 1; k <= opt.hodge_genus0_mumax; ++k) {
            MultiPoly got = hodge_genus0({k});
            MultiPoly want =
                MultiPoly::var(VLAMBDA, k + 1, Rat(binomial_ll(2 * k, k - 1)) / Rat(2 * k));
            if (got != want)
                note_failure(it, "mu1=" + std::to_string(k) + ": got " + poly_to_string(got));
            std::string msg;
            if (!genus0_lambda_expansion_check(k, &msg)) note_failure(it, msg);
        }
        if (it.ok) it.detail = "mu1 <= " + std::to_string(opt.hodge_genus0_mumax);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("genus 0 equals the eps^-2 coefficient");
        int count = 0;
        for (const auto& mu : partitions_up_to(opt.hodge_weight)) {
            HodgeSeries h = hodge_rhs(mu, 0);
            MultiPoly via_series = h.count(-2) ? h.at(-2) : MultiPoly();
            if (via_series != hodge_genus0(mu))
                note_failure(it, "mu=" + key_str(mu) + " disagrees");
            ++count;
        }
        if (it.ok) it.detail = std::to_string(count) + " partitions";
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("eps^{2g-2} at lambda = 1: series route = binomial bracket");
        int count = 0;
        for (const auto& mu : partitions_up_to(opt.hodge_routes_weight)) {
            std::string msg;
            if (!hodge_routes_check(mu, opt.hodge_gmax, &msg))
                note_failure(it, "mu=" + key_str(mu) + ": " + msg);
            ++count;
        }
        if (it.ok)
            it.detail = std::to_string(count) + " partitions, g <= " +
                        std::to_string(opt.hodge_gmax);
        rep.items.push_back(std::move(it));
    }

    {
        CheckItem it = make_item("one-cycle bracket at genus 1 equals -1");
        Rat got = elsv_combination({1}, 1).hurwitz_side;
        if (got != Rat(-1)) note_failure(it, "got " + lue::to_string(got));
        else it.detail = "exact";
        rep.items.push_back(std::move(it));
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> run_checks(const std::string& name, const CheckOptions& opt) {
    if (name == "all")
        return {suite_recursions(opt), suite_projector(opt),  suite_symmetry(opt),
                suite_virasoro(opt),   suite_parity(opt),     suite_integrality(opt),
                suite_fixtures(opt),   suite_factorization(opt), suite_hodge(opt)};
    if (name == "recursions") return {suite_recursions(opt)};
    if (name == "projector") return {suite_projector(opt)};
    if (name == "symmetry") return {suite_symmetry(opt)};
    if (name == "virasoro") return {suite_virasoro(opt)};
    if (name == "parity") return {suite_parity(opt)};
    if (name == "integrality") return {suite_integrality(opt)};
    if (name == "fixtures") return {suite_fixtures(opt)};
    if (name == "factorization") return {suite_factorization(opt)};
    if (name == "hodge") return {suite_hodge(opt)};
    throw std::invalid_argument("unknown check suite: " + name);
}

} // namespace lue
