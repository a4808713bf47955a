#pragma once

#include <vector>

#include "tricube/mpoly.hpp"

namespace tricube {

// Subresultants of P, Q taken as univariate polynomials in one variable with
// multivariate coefficients. Throughout, p = deg(P,v) >= q = deg(Q,v).

// Determinantal definition of the subresultant of index d (0 <= d < q): the
// matrix has rows v^(q-d-1)*P ... P, v^(p-d-1)*Q ... Q over the columns
// v^(p+q-d-1) ... v^0, and the coefficient of v^k is the determinant of the
// square block made of the first p+q-2d-1 columns plus the v^k column. All
// d+1 coefficient determinants are recovered from a single fraction-free
// elimination pass. Intended as an oracle: the matrix dimension p+q-2d is
// capped at 24.
MultiPoly dpol_subres(const MultiPoly& P, const MultiPoly& Q, int v, int d);

// Full chain computed by the divisibility relations over k[x...], with exact
// divisions in the polynomial ring. Entries of index 0..q-1 live in s; a
// defective entry (degree strictly below its index) is stored at its index
// with the repaired copy at its degree, and skipped indices are zero.
//
// The top element of index q is lc(Q,v)^(p-q-1) * Q. When p > q that is a
// polynomial, stored in top with top_scaled = true. When p == q the scale is
// a formal inverse, so top holds plain Q and top_scaled = false; consumers
// needing the true top element must divide by lc(Q,v) themselves (over a
// zero-dimensional quotient, via its inverse). The principal coefficient of
// index q is always the polynomial lc(Q,v)^(p-q), stored in sq.
struct SubresChainM {
  std::vector<MultiPoly> s;
  MultiPoly top;
  bool top_scaled = false;
  MultiPoly sq;
  int p = 0;
  int q = 0;
  int var = -1;
};
SubresChainM subres_chain_m(const MultiPoly& P, const MultiPoly& Q, int v);

// Resultant of P and Q with respect to v, with the degenerate conventions of
// the univariate routine: both constant in v -> 1; zero against positive
// degree -> 0; a v-constant c against degree-d B -> c^d; arguments are
// swapped as needed, multiplying by (-1)^(deg P * deg Q).
MultiPoly resultant(const MultiPoly& P, const MultiPoly& Q, int v);

// Compares the chain of the specialized pair against the specialized chain,
// index by index (0..q-1), for one assignment of every variable except v.
// Throws when the assignment kills an initial, since the comparison is only
// meaningful when both leading coefficients survive.
std::vector<bool> specialize_check(const MultiPoly& P, const MultiPoly& Q,
                                   int v, const std::vector<Fp>& assignment);

}  // namespace tricube
