#pragma once
// Pochhammer denominator blocks. The negative-moment formulas produce
// denominators built from
//     a_j = (alpha - j)_{2j+1} = (alpha - j)(alpha - j + 1) ... (alpha + j),
// i.e. the product of the 2j+1 linear factors (alpha + s), s = -j..j.
// A BlockVec is a multiset of such blocks; internally reductions work on the
// underlying multiset of linear factors (shift -> multiplicity) and reassemble
// blocks at the end.

#include "lue/multipoly.hpp"

#include <map>
#include <string>

namespace lue {

struct PochhammerBlock {
    int j = 0;
    int mult = 1;
};

// block index j -> multiplicity (>0)
using BlockVec = std::map<int, int>;

// expand a_j^mult as a polynomial in alpha
MultiPoly pochhammer_expand(int j, int mult = 1);

// expand a whole BlockVec
MultiPoly blocks_expand(const BlockVec& b);

// linear-factor view: shift s -> multiplicity of (alpha + s)
using LinFactors = std::map<int, int>;

LinFactors blocks_to_linear(const BlockVec& b);

// Can `lf` be written as a multiset of full blocks? Requires multiplicity
// symmetric in s -> -s and non-increasing in |s|. On success fills `out`.
bool linear_to_blocks(const LinFactors& lf, BlockVec& out);

// least common multiple / product / exact quotient on multisets
BlockVec blocks_lcm(const BlockVec& a, const BlockVec& b);
BlockVec blocks_mul(const BlockVec& a, const BlockVec& b);
LinFactors linear_mul(const LinFactors& a, const LinFactors& b);
LinFactors linear_lcm(const LinFactors& a, const LinFactors& b);
// a / b, asserting b <= a pointwise
LinFactors linear_div(const LinFactors& a, const LinFactors& b);

MultiPoly linear_expand(const LinFactors& lf);

// "a3*a1^2" (descending j; latex "a_{3} a_{1}^{2}"); empty multiset -> "1"
std::string blocks_to_string(const BlockVec& b, bool latex = false);

// evaluation guard: does alpha0 make some factor of the multiset vanish?
bool blocks_vanish_at(const BlockVec& b, const Rat& alpha0);

} // namespace lue
