#include "lue/zpoly.hpp"

#include <stdexcept>

namespace lue {

ZPoly zpoly_from_linear(const std::map<int, int>& lf) {
    ZPoly r(1);
    for (const auto& [s, m] : lf) {
        ZPoly f;
        f.c = {Int(s), Int(1)};
        for (int i = 0; i < m; ++i) r = r * f;
    }
    return r;
}

std::vector<Rat> newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    size_t n = xs.size();
    if (ys.size() != n || n == 0) throw std::invalid_argument("newton_interpolate: bad input");
    // divided differences
    std::vector<Rat> dd = ys;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rat denom = xs[i] - xs[i - level];
            if (lue::is_zero(denom)) throw std::invalid_argument("newton_interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / denom;
            if (i == level) break;
        }
    }
    // expand the Newton form into monomials
    std::vector<Rat> out(n, Rat(0));
    std::vector<Rat> basis{Rat(1)}; // product (x - xs[0])...(x - xs[k-1])
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < basis.size(); ++i) out[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // basis *= (x - xs[k])
            basis.push_back(Rat(0));
            for (size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - xs[k] * basis[i];
            basis[0] = -xs[k] * basis[0];
        }
    }
    while (out.size() > 1 && lue::is_zero(out.back())) out.pop_back();
    return out;
}

} // namespace lue
