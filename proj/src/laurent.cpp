#include "lue/laurent.hpp"

namespace lue {

std::string laurent_to_string(const Laurent1& l, const std::string& var) {
    if (l.is_zero()) return "0";
    std::string out;
    // descending exponent reads naturally for the 1/(c-1) tables
    for (auto it = l.terms.rbegin(); it != l.terms.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string piece;
        std::string mono;
        if (k != 0) {
            mono = var;
            if (k != 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) piece = to_string(c);
        else if (c == 1) piece = mono;
        else if (c == -1) piece = "-" + mono;
        else piece = to_string(c) + "*" + mono;
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out;
}

std::string Laurent1::to_string(const std::string& var) const {
    return laurent_to_string(*this, var);
}

} // namespace lue
