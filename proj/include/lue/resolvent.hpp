#pragma once
// The 2x2 matrix-resolvent series of the Laguerre ensemble and the connected
// correlators extracted from it.
//
// R_plus(x)  = E_11 + sum_{l>=0} x^{-l-1} [[ l A_l,          B_l(N+1,M+1) ],
//                                          [ -N M B_l(N,M),  -l A_l       ]]
// R_minus(x) = E_11 + sum_{l>=0} x^l / a_l [[ (l+1) A_l,     -B_l(N+1,M+1)],
//                                           [ N M B_l(N,M),  -(l+1) A_l   ]]
// with M = N + alpha and a_l = (alpha - l)_{2l+1}.
//
// A connected correlator < prod_i tr X^{k_i} >_c (k_i nonzero integers,
// negative k_i meaning inverse powers) is the coefficient of
// prod_i x_i^{-sgn(k_i)|k_i| - 1} in the cyclic-sum generating function
//   - sum_{r-cycles} ( tr prod_j R_{sgn}(x_{i_j}) - delta_{r,2} )
//                    / ((x_{i_1}-x_{i_2}) ... (x_{i_r}-x_{i_1}))
// times (-1)^{#negative keys}, with each 1/(x_a - x_b) expanded in the
// canonical region for the pair {a, b} (fixed across all cyclic terms):
// infinity-variables dominate zero-variables; among two infinity-variables
// the lower index is larger; among two zero-variables the lower index is
// smaller.

#include "lue/correlator_value.hpp"
#include "lue/series.hpp"

#include <array>
#include <vector>

namespace lue {

struct ResolventSeries {
    // entries [row][col], row/col in {0,1}; series in one variable x
    std::array<std::array<TruncatedSeries<CorrelatorValue>, 2>, 2> e;
    ResolventSeries()
        : e{{{TruncatedSeries<CorrelatorValue>(1), TruncatedSeries<CorrelatorValue>(1)},
             {TruncatedSeries<CorrelatorValue>(1), TruncatedSeries<CorrelatorValue>(1)}}} {}
};

// sign = +1 or -1; orders l = 0..lmax are retained and the windows say so
ResolventSeries build_resolvent(int sign, int lmax);

// canonical key: positive parts descending, then negative parts descending
// (as integers, so -1 before -2); zero entries are rejected
std::vector<int> canonical_key(std::vector<int> key);

// < tr X^k >, closed form (k != 0)
CorrelatorValue one_point(int k);

struct EngineOptions {
    int order_margin = 2;     // slack added to the truncation window
    // region override for the regularity property: variable indices are
    // permuted by this table (identity when empty) before the canonical
    // index comparisons that fix each pair's geometric region
    std::vector<int> region_permutation;
    bool verify_extra_sample = true;
};

// connected correlator for any nonzero integer keys
CorrelatorValue connected_correlator(const std::vector<int>& key, const EngineOptions& opt = {});

// full (disconnected) moment via the cumulant-to-moment sum over set
// partitions of the key multiset
CorrelatorValue moments_from_connected(const std::vector<int>& key, const EngineOptions& opt = {});

// Taylor coefficients (by key multiset) of (L_n Z)/Z, all of which must vanish;
// returns the residual for each key multiset with weighted degree <= degree
// (the weight of t_k is k). n >= 0.
std::vector<std::pair<std::vector<int>, CorrelatorValue>> virasoro_residual(int n, int degree);

// even-GUE factorization residual for a positive key: the even-coupling GUE
// connected correlator at size 2N minus 2^{sum k} times the sum of the two
// alpha = -1/2, +1/2 Laguerre correlators. Must be identically zero in N.
MultiPoly mgue_factorization_residual(const std::vector<int>& key);

} // namespace lue
