#pragma once
// Hurwitz side of the Hodge correspondence. The strict weighted numbers
// H_gamma^>(mu; s) are combined into
//
//   2^len sum_gamma (2 eps)^{2 gamma - 2}
//         sum_{s=1}^{1-2gamma+|mu|-len} (lambda+eps/2)^{2-2gamma+|mu|-len-s}
//                                       (lambda-eps/2)^s  H_gamma^>(mu;s),
//
// a Laurent polynomial in eps whose coefficients are polynomials in lambda;
// only even powers of eps survive, and the eps^{2g-2} coefficient at
// lambda = 1 reduces to the binomial combination that prices the
// Lambda^2(-1) Lambda(1/2) kappa-psi integral over moduli space.

#include "lue/topo.hpp"

namespace lue {

// eps-power -> polynomial in lambda (VLAMBDA); keys are even, >= -2
using HodgeSeries = std::map<int, MultiPoly>;

// complete for eps-powers <= 2*gmax - 2 (anything above needs deeper tables
// and is clipped); throws std::logic_error if an odd eps-power survives
HodgeSeries hodge_rhs(const std::vector<int>& mu, int gmax);

// 2^{len-2} lambda^{|mu|+2-len} sum_s H_0^>(mu;s), the eps^{-2} coefficient
MultiPoly hodge_genus0(const std::vector<int>& mu);

// first three (lambda-1)-expansion coefficients of hodge_genus0((mu1)):
// binom(2 mu1, mu1) times 1/(2 mu1 + 2), 1/2, mu1/4. Requires mu1 <= 10.
bool genus0_lambda_expansion_check(int mu1, std::string* msg = nullptr);

struct ElsvCombination {
    Rat hurwitz_side;       // sum_gamma 2^{4 gamma} [binomial bracket] H_gamma^>
    Rat predicted_integral; // divided by 2^{3g+1-len} prod_a mu_a binom(2 mu_a, mu_a)
};
ElsvCombination elsv_combination(const std::vector<int>& mu, int g);

// the two routes to the eps^{2g-2} coefficient at lambda = 1 must agree:
// [eps^{2g-2}] hodge_rhs = 2^{len-2g-2} * hurwitz_side, for every g <= gmax
bool hodge_routes_check(const std::vector<int>& mu, int gmax, std::string* msg = nullptr);

// genus-zero delta terms of the correspondence, defined for len(mu) <= 2:
// len 1: (lambda - mu1/(mu1+1))/2 * binom(2 mu1, mu1)
// len 2: mu1 mu2/(2(mu1+mu2)) * binom(2 mu1, mu1) binom(2 mu2, mu2)
MultiPoly hodge_A_quadratic(const std::vector<int>& mu);

} // namespace lue
