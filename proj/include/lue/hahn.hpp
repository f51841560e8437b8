#pragma once
// The two coefficient families A_l(N, M), B_l(N, M) driving the matrix
// resolvents, with three independent constructions (terminating-sum,
// three-term recursion, manifestly-integral double sum) plus the scaled
// families D_l, E_l, F_l used for the 1/N structure results. A_l and B_l are
// polynomials in (N, M) with integer coefficients; M plays the role N+alpha.

#include "lue/multipoly.hpp"
#include "lue/zpoly.hpp"

#include <map>
#include <vector>

namespace lue {

enum class CoeffKind { A, B };

// terminating-sum definitions (A_0 = N, B_0 = 1)
MultiPoly coeff_A_sum(int l);
MultiPoly coeff_B_sum(int l);

// whole family 0..lmax via the three-term recursions
std::vector<MultiPoly> coeff_recursion(CoeffKind kind, int lmax);

// manifestly integer-coefficient double-sum form (l >= 0)
MultiPoly coeff_integer_form(CoeffKind kind, int l);

// memoized family accessors (recursion route; cheapest)
const MultiPoly& coeff_A(int l);
const MultiPoly& coeff_B(int l);
// B_l with both arguments shifted by one: B_l(N+1, M+1)
const MultiPoly& coeff_B_shifted(int l);

// --- engine evaluation forms -----------------------------------------------

// numeric: A_l(N0, M0), B_l(N0, M0), B_l(N0+1, M0+1) for l = 0..lmax
struct CoeffTableInt {
    std::vector<Int> A, B, Bs;
};
CoeffTableInt coeff_eval_int(int lmax, const Int& N0, const Int& M0);

// alpha-symbolic at integer N0 (M = N0 + alpha): dense polynomials in alpha
struct CoeffTableAlpha {
    std::vector<ZPoly> A, B, Bs;
};
CoeffTableAlpha coeff_eval_alpha(int lmax, const Int& N0);

// --- scaled families ---------------------------------------------------------

// Laurent polynomials in N whose coefficients are polynomials in c.
// D and F are stored with the overall sqrt(c) factor stripped:
//   stored D_l = N^{-l}   (B_l(N+1, cN+1) - B_l(N, cN))
//   stored F_l = N^{1-l}  (B_l(N+1, cN+1) + B_l(N, cN))
//   E_l        = -2 N^{-l} A_l(N, cN)
using NLaurent = std::map<int, MultiPoly>; // N power -> polynomial in c

struct ScaledDEF {
    std::vector<NLaurent> D, E, F; // index l = 0..lmax
};

// computed from the definitions and from the coupled recursions; the two
// routes are asserted equal before returning
ScaledDEF scaled_DEF(int lmax);

// planar limits: leading coefficients  [N^{l+1}] A_l(N, cN) and [N^l] B_l(N, cN)
MultiPoly planar_A(int l); // polynomial in c
MultiPoly planar_B(int l);

} // namespace lue
