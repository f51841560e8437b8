#include "lue/multipoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lue {

static const char* kVarNames[kNumVars] = {"N", "M", "alpha", "c", "lambda", "eps"};

const char* var_name(int v) { return kVarNames[v]; }

int var_index(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return i;
    // single-letter aliases used in fixtures/CLI
    if (name == "a") return VALPHA;
    if (name == "n") return VN;
    return -1;
}

MultiPoly MultiPoly::var(int v, int pow, const Rat& coeff) {
    MultiPoly p;
    if (lue::is_zero(coeff)) return p;
    Expo e{};
    e[v] = (int16_t)pow;
    p.terms[e] = coeff;
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == Expo{};
}

Rat MultiPoly::constant_term() const {
    auto it = terms.find(Expo{});
    return it == terms.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
    if (lue::is_zero(c)) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (lue::is_zero(it->second)) terms.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            Expo e;
            for (int i = 0; i < kNumVars; ++i) e[i] = (int16_t)(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
    if (lue::is_zero(c)) { terms.clear(); return *this; }
    for (auto& [e, v] : terms) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r{Rat(1)};
    MultiPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

int MultiPoly::degree(int v) const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, (int)e[v]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

MultiPoly MultiPoly::coeff_of(int v, int k) const {
    MultiPoly r;
    for (const auto& [e, c] : terms) {
        if (e[v] != k) continue;
        Expo e2 = e;
        e2[v] = 0;
        r.terms[e2] = c;
    }
    return r;
}

bool MultiPoly::is_integral() const {
    for (const auto& [e, c] : terms)
        if (c.get_den() != 1) return false;
    return true;
}

Rat MultiPoly::eval(const std::array<Rat, kNumVars>& point) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms) {
        Rat t = c;
        for (int i = 0; i < kNumVars; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

MultiPoly poly_substitute(const MultiPoly& p, int v, const MultiPoly& repl) {
    // group by exponent of v, then Horner in the replacement
    int dmax = p.degree(v);
    if (dmax <= 0 && !(dmax == 0)) return p;
    std::vector<MultiPoly> by_deg((size_t)std::max(dmax + 1, 1));
    for (const auto& [e, c] : p.terms) {
        Expo e2 = e;
        int k = e[v];
        e2[v] = 0;
        by_deg[(size_t)k].add_term(e2, c);
    }
    MultiPoly acc;
    for (int k = dmax; k >= 0; --k) {
        acc = acc * repl;
        acc += by_deg[(size_t)k];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// parser: expr := term (('+'|'-') term)*, term := factor ('*'? factor)*,
// factor := base ('^' uint)?, base := int | var | '(' expr ')' | '-' factor

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool peek_is(char c) { skip(); return i < s.size() && s[i] == c; }
    bool eat(char c) { if (peek_is(c)) { ++i; return true; } return false; }

    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("poly_parse: " + why + " at offset " +
                                    std::to_string(i) + " in '" + s + "'");
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        for (;;) {
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else return acc;
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        for (;;) {
            skip();
            if (eat('*')) { acc = acc * parse_factor(); continue; }
            // implicit multiplication: "2alpha", "alpha(1+...)", ")("
            if (i < s.size() &&
                (std::isalnum((unsigned char)s[i]) || s[i] == '(')) {
                acc = acc * parse_factor();
                continue;
            }
            return acc;
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip();
        if (eat('^')) {
            skip();
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (start == i) fail("expected exponent");
            unsigned n = (unsigned)std::stoul(s.substr(start, i - start));
            return base.pow(n);
        }
        return base;
    }

    MultiPoly parse_base() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (eat('-')) {
            MultiPoly f = parse_factor();
            return -f;
        }
        if (eat('(')) {
            MultiPoly e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        char c = s[i];
        if (std::isdigit((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            Int z(s.substr(start, i - start), 10);
            return MultiPoly(Rat(z));
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = i;
            while (i < s.size() && std::isalpha((unsigned char)s[i])) ++i;
            std::string name = s.substr(start, i - start);
            int v = var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return MultiPoly::var(v);
        }
        fail("unexpected character");
    }
};

} // namespace

MultiPoly poly_parse(const std::string& s) {
    Parser p(s);
    MultiPoly r = p.parse_expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string mono_str(const Expo& e, bool latex) {
    std::string out;
    for (int v = 0; v < kNumVars; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += latex ? " " : "*";
        std::string nm = kVarNames[v];
        if (latex) {
            if (v == VALPHA) nm = "\\alpha";
            else if (v == VLAMBDA) nm = "\\lambda";
            else if (v == VEPS) nm = "\\epsilon";
        }
        out += nm;
        if (e[v] != 1) {
            if (latex) out += "^{" + std::to_string((int)e[v]) + "}";
            else out += "^" + std::to_string((int)e[v]);
        }
    }
    return out;
}

std::string coeff_mono(const Rat& c, const std::string& mono, bool latex) {
    std::string cs = to_string(c);
    if (mono.empty()) return cs;
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    if (latex && c.get_den() != 1)
        cs = "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    return cs + (latex ? " " : "*") + mono;
}

std::string join_terms(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (out.empty()) { out = p; continue; }
        if (!p.empty() && p[0] == '-') out += " - " + p.substr(1);
        else out += " + " + p;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string poly_to_flat_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [e, c] : p.terms) parts.push_back(coeff_mono(c, mono_str(e, false), false));
    return join_terms(parts);
}

std::string poly_to_string(const MultiPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    // Group by N-power only when the polynomial actually lives in (N, alpha);
    // anything using other variables falls back to the flat form.
    for (const auto& [e, c] : p.terms)
        if (e[VM] || e[VC] || e[VLAMBDA] || e[VEPS])
            return poly_to_flat_string(p);

    int dN = std::max(p.degree(VN), 0);
    std::vector<std::string> groups;
    for (int n = 0; n <= dN; ++n) {
        MultiPoly g = p.coeff_of(VN, n); // polynomial in alpha
        if (g.is_zero()) continue;
        // pull scalar content (gcd of numerators / lcm of denominators) and
        // the common alpha power
        Int num_gcd = 0, den_lcm = 1;
        int amin = 1 << 20;
        for (const auto& [e, c] : g.terms) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            amin = std::min(amin, (int)e[VALPHA]);
        }
        Rat content(num_gcd, den_lcm);
        content.canonicalize();
        // sign: make the lowest-degree inner coefficient positive
        if (sgn(g.terms.begin()->second) < 0) content = -content;

        std::vector<std::pair<int, Rat>> inner; // (alpha power, coeff), ascending
        for (const auto& [e, c] : g.terms) inner.emplace_back((int)e[VALPHA] - amin, c / content);

        std::string apow;
        {
            Expo e{};
            e[VALPHA] = (int16_t)amin;
            apow = mono_str(e, latex);
        }
        std::string npow;
        {
            Expo e{};
            e[VN] = (int16_t)n;
            npow = mono_str(e, latex);
        }

        std::string inner_s;
        if (inner.size() == 1 && inner[0].first == 0) {
            // single monomial: fold everything into the coefficient
            Rat c0 = content * inner[0].second;
            std::string mono = apow;
            if (!npow.empty()) mono += (mono.empty() ? "" : (latex ? " " : "*")) + npow;
            groups.push_back(coeff_mono(c0, mono, latex));
            continue;
        }
        {
            std::vector<std::string> ps;
            for (const auto& [ap, c] : inner) {
                Expo e{};
                e[VALPHA] = (int16_t)ap;
                ps.push_back(coeff_mono(c, mono_str(e, latex), latex));
            }
            inner_s = "(" + join_terms(ps) + ")";
        }
        std::string mono;
        if (!apow.empty()) mono = apow + (latex ? " " : "*");
        mono += inner_s;
        if (!npow.empty()) mono += (latex ? " " : "*") + npow;
        groups.push_back(coeff_mono(content, mono, latex));
    }
    return join_terms(groups);
}

} // namespace lue
