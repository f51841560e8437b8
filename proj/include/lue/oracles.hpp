#pragma once
// Brute-force ground truth, independent of the resolvent machinery:
//  * monotone transposition-factorization counts in symmetric groups,
//  * small-N LUE correlators by direct eigenvalue integration,
//  * even-GUE connected moments by Wick pairing.
// Everything here is deliberately literal-minded; speed comes from the small
// guardrailed sizes, not cleverness.

#include "lue/multipoly.hpp"
#include "lue/partition.hpp"

#include <map>
#include <vector>

namespace lue {

enum class MonotoneFlavor { Strict, Weak };

// Counts of tuples (alpha, tau_1..tau_r, beta): alpha of cycle type mu,
// tau_j = (a_j b_j) transpositions with a_j < b_j and b_1 < ... < b_r
// (strict) or b_1 <= ... <= b_r (weak), alpha tau_1 ... tau_r = beta, and
// <alpha, tau_1, ..., tau_r> acting transitively on {1..d}. All alpha of the
// given cycle type are enumerated; the count is classified by (r, type(beta)).
struct MonotoneCounts {
    int rmax = -1;
    std::vector<std::map<std::vector<int>, Int>> by_r; // by_r[r][beta type]
};

// enumerate (memoized per (mu, flavor), re-run when rmax grows)
const MonotoneCounts& monotone_counts(const std::vector<int>& mu, int rmax, MonotoneFlavor flavor);

// h_g^{>/>=}(mu; nu); zero when r = l(mu)+l(nu)+2g-2 < 0
Int hurwitz_brute(const std::vector<int>& mu, const std::vector<int>& nu, int g,
                  MonotoneFlavor flavor);

// H_g(mu; s) = (z_mu / |mu|!) sum_{l(nu)=s} h_g(mu; nu); asserts integrality
Int hurwitz_weighted(const std::vector<int>& mu, int s, int g, MonotoneFlavor flavor);

// ---------------------------------------------------------------------------

// ratio of polynomials in alpha; kept unreduced (compare by cross product)
struct UniRatFn {
    MultiPoly num; // in VALPHA only
    MultiPoly den;
    UniRatFn() : num(), den(1) {}
    UniRatFn(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {}
    bool equals(const UniRatFn& o) const { return num * o.den == o.num * den; }
};

// disconnected <prod_i tr X^{k_i}> at N eigenvalues by expanding the squared
// Vandermonde and integrating monomials against x^alpha e^{-x} on (0,inf);
// exact rational function of alpha. N_small in {1,2,3}.
UniRatFn lue_eigenvalue_moment(const std::vector<int>& key, int N_small);

// connected version (moebius sum over set partitions of the key entries)
UniRatFn lue_eigenvalue_oracle(const std::vector<int>& key, int N_small);

// ---------------------------------------------------------------------------

// disconnected GUE moment <prod_i tr Y^{p_i}> for weight exp(-tr Y^2/2):
// sum over perfect matchings of index positions of N^{#loops}; in VN
MultiPoly gue_moment(const std::vector<int>& powers);

// connected even-GUE moment (powers must be positive and even)
MultiPoly gue_even_oracle(const std::vector<int>& powers);

// guardrails (overridable via environment)
int oracle_max_degree();     // LUE_ORACLE_MAX_D, default 6  (symmetric group size)
int oracle_max_gue_points(); // LUE_ORACLE_MAX_GUE, default 12 (sum of GUE powers)

} // namespace lue
