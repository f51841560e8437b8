#include "lue/pochhammer.hpp"

#include <stdexcept>

namespace lue {

MultiPoly pochhammer_expand(int j, int mult) {
    BlockVec b;
    b[j] = mult;
    return blocks_expand(b);
}

MultiPoly blocks_expand(const BlockVec& b) {
    return linear_expand(blocks_to_linear(b));
}

LinFactors blocks_to_linear(const BlockVec& b) {
    LinFactors lf;
    for (const auto& [j, m] : b) {
        if (m <= 0 || j < 0) throw std::invalid_argument("bad block");
        for (int s = -j; s <= j; ++s) lf[s] += m;
    }
    return lf;
}

bool linear_to_blocks(const LinFactors& lf, BlockVec& out) {
    out.clear();
    if (lf.empty()) return true;
    int jmax = 0;
    for (const auto& [s, m] : lf) {
        if (m < 0) throw std::invalid_argument("negative multiplicity");
        jmax = std::max(jmax, std::abs(s));
    }
    auto mult = [&](int s) {
        auto it = lf.find(s);
        return it == lf.end() ? 0 : it->second;
    };
    // n_j = mult(j) - mult(j+1) must be >= 0, and mult must be symmetric
    for (int s = 0; s <= jmax; ++s)
        if (mult(s) != mult(-s)) return false;
    for (int j = jmax; j >= 0; --j) {
        int n = mult(j) - mult(j + 1);
        if (n < 0) return false;
        if (n > 0) out[j] = n;
    }
    return true;
}

BlockVec blocks_lcm(const BlockVec& a, const BlockVec& b) {
    BlockVec out;
    LinFactors la = blocks_to_linear(a), lb = blocks_to_linear(b);
    if (!linear_to_blocks(linear_lcm(la, lb), out))
        throw std::logic_error("blocks_lcm: lcm of block multisets is not a block multiset");
    return out;
}

BlockVec blocks_mul(const BlockVec& a, const BlockVec& b) {
    BlockVec out = a;
    for (const auto& [j, m] : b) out[j] += m;
    return out;
}

LinFactors linear_mul(const LinFactors& a, const LinFactors& b) {
    LinFactors out = a;
    for (const auto& [s, m] : b) out[s] += m;
    return out;
}

LinFactors linear_lcm(const LinFactors& a, const LinFactors& b) {
    LinFactors out = a;
    for (const auto& [s, m] : b) {
        int& v = out[s];
        v = std::max(v, m);
    }
    return out;
}

LinFactors linear_div(const LinFactors& a, const LinFactors& b) {
    LinFactors out = a;
    for (const auto& [s, m] : b) {
        auto it = out.find(s);
        if (it == out.end() || it->second < m)
            throw std::logic_error("linear_div: not divisible");
        it->second -= m;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

MultiPoly linear_expand(const LinFactors& lf) {
    MultiPoly p{Rat(1)};
    for (const auto& [s, m] : lf) {
        MultiPoly f = MultiPoly::var(VALPHA);
        f += MultiPoly(Rat(s));
        for (int i = 0; i < m; ++i) p = p * f;
    }
    return p;
}

std::string blocks_to_string(const BlockVec& b, bool latex) {
    if (b.empty()) return "1";
    std::string out;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        if (!out.empty()) out += latex ? " " : "*";
        if (latex) {
            out += "a_{" + std::to_string(it->first) + "}";
            if (it->second != 1) out += "^{" + std::to_string(it->second) + "}";
        } else {
            out += "a" + std::to_string(it->first);
            if (it->second != 1) out += "^" + std::to_string(it->second);
        }
    }
    return out;
}

bool blocks_vanish_at(const BlockVec& b, const Rat& alpha0) {
    if (!is_integer(alpha0)) return false;
    Int a = alpha0.get_num();
    if (b.empty()) return false;
    int jmax = b.rbegin()->first;
    // some factor (alpha + s), s in [-jmax, jmax], vanishes iff alpha0 = -s
    return mpz_cmpabs_ui(a.get_mpz_t(), (unsigned long)jmax) <= 0;
}

} // namespace lue
