#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tricube/densepoly.hpp"
#include "tricube/field.hpp"

namespace tricube {

/// Shared variable universe: vars are ordered ascending, vars.back() is the
/// highest (main) variable. Every polynomial in one computation shares one
/// context object.
struct PolyCtx {
  PrimeField field;
  std::vector<std::string> vars;
};
using CtxPtr = std::shared_ptr<const PolyCtx>;

CtxPtr make_ctx(uint64_t prime, std::vector<std::string> vars);

/// Multivariate polynomial in recursive dense form: a constant, or a vector
/// of coefficients (polynomials in strictly lower variables) indexed by the
/// power of its top variable. The form is canonical (top coefficient nonzero,
/// no single-coefficient levels), so structural equality is equality.
class MultiPoly {
 public:
  MultiPoly() = default;  // detached null poly; usable only as a target

  static MultiPoly zero(CtxPtr ctx);
  static MultiPoly constant(CtxPtr ctx, Fp c);
  static MultiPoly from_int(CtxPtr ctx, long long c);
  /// x_v^exp
  static MultiPoly var(CtxPtr ctx, int v, int exp = 1);
  /// Polynomial with coeffs[k] multiplying x_v^k; collapses to canonical form.
  /// Every coefficient must have main variable below v.
  static MultiPoly from_coeffs(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs);

  const CtxPtr& ctx() const { return ctx_; }
  bool is_null() const { return ctx_ == nullptr; }
  bool is_zero() const { return var_ < 0 && cval_.v == 0; }
  bool is_constant() const { return var_ < 0; }
  Fp constant_value() const;

  /// Highest variable, -1 for constants.
  int main_var() const { return var_; }
  /// Highest variable; throws precondition_error for constants.
  int mvar() const;
  /// Degree in x_v; -1 for the zero polynomial, else >= 0.
  int degree(int v) const;
  int main_degree() const;

  /// Leading coefficient with respect to mvar(); precondition: non-constant.
  MultiPoly initial() const;
  /// The polynomial minus its leading term in mvar(); precondition: non-constant.
  MultiPoly reductum() const;
  /// Coefficient of x_v^k, a polynomial not involving x_v.
  MultiPoly coeff_in(int v, int k) const;
  /// Coefficients 0..degree(v) viewed as univariate in x_v. Empty for zero.
  std::vector<MultiPoly> to_univar(int v) const;
  static MultiPoly from_univar(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs);
  int total_degree() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scale(Fp s) const;
  MultiPoly pow(uint64_t e) const;

  /// x_v := val
  MultiPoly subst(int v, Fp val) const;
  /// x_v := x_v + c
  MultiPoly subst_shift(int v, Fp c) const;
  /// Full evaluation; point[v] gives the value of variable v.
  Fp eval(const std::vector<Fp>& point) const;

  /// Conversion to a dense univariate in x_v; throws precondition_error if a
  /// different variable occurs.
  DensePoly1 to_dense1(int v) const;
  static MultiPoly from_dense1(CtxPtr ctx, int v, const DensePoly1& d);

  /// Stable serialization of the structure, usable as a hash/cache key.
  std::string canonical_bytes() const;

 private:
  CtxPtr ctx_;
  int var_ = -1;
  Fp cval_{0};
  std::vector<MultiPoly> coeffs_;

  static MultiPoly make(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs);
};

struct PremResult {
  MultiPoly rem;
  MultiPoly quo;
  int exp;  // lc(B, v)^exp * A == quo * B + rem
};

/// Pseudo-division of A by B in variable v with the full-exponent convention
/// exp = max(deg(A,v) - deg(B,v) + 1, 0). B must be nonzero.
PremResult prem(const MultiPoly& A, const MultiPoly& B, int v);

/// Quotient when B divides A exactly over the polynomial ring, else nullopt.
std::optional<MultiPoly> divide_exact(const MultiPoly& A, const MultiPoly& B);

/// Throws internal_error when a and b belong to different contexts.
void check_same_ctx(const MultiPoly& a, const MultiPoly& b);

}  // namespace tricube
