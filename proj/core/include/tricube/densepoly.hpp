#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tricube/field.hpp"

namespace tricube {

/// Dense univariate polynomial over a prime field.
/// Coefficients are ascending (c[k] multiplies x^k) and trimmed: c is either
/// empty (the zero polynomial) or ends with a nonzero coefficient.
struct DensePoly1 {
  std::vector<Fp> c;
};

inline bool dp_is_zero(const DensePoly1& a) { return a.c.empty(); }
/// Degree, with deg(0) = -1.
inline int dp_deg(const DensePoly1& a) { return static_cast<int>(a.c.size()) - 1; }
/// Leading coefficient; zero for the zero polynomial.
inline Fp dp_lc(const DensePoly1& a) { return a.c.empty() ? Fp{0} : a.c.back(); }

void dp_trim(DensePoly1& a);
DensePoly1 dp_from_u64(const PrimeField& F, const std::vector<uint64_t>& coeffs);

bool dp_eq(const DensePoly1& a, const DensePoly1& b);
DensePoly1 dp_add(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);
DensePoly1 dp_sub(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);
DensePoly1 dp_neg(const PrimeField& F, const DensePoly1& a);
DensePoly1 dp_scale(const PrimeField& F, const DensePoly1& a, Fp s);
/// Multiply by x^k.
DensePoly1 dp_shift_pow(const DensePoly1& a, int k);
DensePoly1 dp_mul(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);

/// Quotient and remainder; the divisor's leading coefficient is inverted, so
/// b must be nonzero.
std::pair<DensePoly1, DensePoly1> dp_divrem(const PrimeField& F,
                                            const DensePoly1& a,
                                            const DensePoly1& b);
DensePoly1 dp_rem(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);
/// Exact division; throws internal_error if the remainder is nonzero.
DensePoly1 dp_div_exact(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);

/// Monic gcd; gcd(0, 0) = 0.
DensePoly1 dp_gcd(const PrimeField& F, DensePoly1 a, DensePoly1 b);
/// Extended gcd: returns (g, u, v) with u*a + v*b = g and g monic (or zero).
struct XgcdResult {
  DensePoly1 g, u, v;
};
XgcdResult dp_xgcd(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);

DensePoly1 dp_derivative(const PrimeField& F, const DensePoly1& a);
Fp dp_eval(const PrimeField& F, const DensePoly1& a, Fp x);
/// f(x + c).
DensePoly1 dp_taylor_shift(const PrimeField& F, const DensePoly1& a, Fp c);

/// Unique interpolant of degree < xs.size() through (xs[i], ys[i]).
/// The xs must be pairwise distinct.
DensePoly1 dp_newton_interp(const PrimeField& F, const std::vector<Fp>& xs,
                            const std::vector<Fp>& ys);

/// Squarefree decomposition of a nonzero polynomial: pairwise-coprime monic
/// squarefree factors with their multiplicities, ascending by multiplicity
/// order of discovery. The product of f_i^{m_i} equals a up to the leading
/// coefficient.
struct SquarefreePart {
  DensePoly1 factor;
  uint64_t multiplicity;
};
std::vector<SquarefreePart> dp_squarefree(const PrimeField& F, const DensePoly1& a);

/// Pseudo-remainder with the full-exponent convention:
/// prem(a, b) = rem(lc(b)^(deg a - deg b + 1) * a, b), and a itself when
/// deg a < deg b. b must be nonzero.
DensePoly1 dp_prem(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);

/// Resultant, with res(a, b) = lc(b)^deg(a) when deg b = 0 (and symmetrically),
/// and 0 when either argument is the zero polynomial of positive counterpart
/// degree. res(const, const) = 1.
Fp dp_resultant(const PrimeField& F, const DensePoly1& a, const DensePoly1& b);

/// Subresultant chain of P, Q with deg P >= deg Q >= 1.
/// s[j] for 0 <= j < deg Q is the subresultant of index j. A nonzero s[j] has
/// degree at most j; strictly smaller degree marks a defective index, and the
/// nondefective rescaled copy then appears again lower in the chain.
/// s[q] is lc(Q)^(deg P - deg Q - 1) * Q, the top chain element; for
/// deg P == deg Q that uses the field inverse of lc(Q).
struct SubresChainFp {
  std::vector<DensePoly1> s;
};
SubresChainFp dp_subres_chain(const PrimeField& F, const DensePoly1& P,
                              const DensePoly1& Q);

/// In-place power-of-two NTT. data.size() must be a power of two, root must
/// have exact multiplicative order data.size() (checked). When inverse is
/// true, applies the inverse transform including the 1/n scaling.
void ntt_transform(const PrimeField& F, std::vector<Fp>& data, Fp root,
                   bool inverse);

}  // namespace tricube
