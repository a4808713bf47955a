#pragma once

#include <vector>

#include "tricube/mpoly.hpp"

namespace tricube {

/// Thrown by tower inversion when the element turns out to be a zero-divisor
/// modulo the chain. `witness` is nonzero modulo the chain yet kills some
/// other nonzero element; the caller is expected to split the chain against
/// the witness and retry on each branch.
class not_invertible_error : public error {
 public:
  explicit not_invertible_error(MultiPoly w)
      : error("zero-divisor encountered during tower inversion"),
        witness(std::move(w)) {}

  MultiPoly witness;
};

/// Triangular set: polynomials with pairwise distinct main variables, stored
/// ascending by main variable. Immutable; every "modification" builds a new
/// value. Entries whose initial is a nonzero constant are rescaled monic on
/// construction, so `normalized()` means every entry is monic in its main
/// variable.
class RegularChain {
 public:
  RegularChain() = default;  // detached; usable only as an assignment target

  static RegularChain empty(CtxPtr ctx);
  /// Builds a chain from non-constant polynomials in any order.
  /// Throws precondition_error on a constant entry or a repeated main
  /// variable. The regular-initials condition is not verified here; chains
  /// are built by operations that guarantee it (check_initials_regular is
  /// the explicit test).
  static RegularChain make(CtxPtr ctx, std::vector<MultiPoly> polys);

  const CtxPtr& ctx() const { return ctx_; }
  bool is_empty() const { return polys_.empty(); }
  std::size_t size() const { return polys_.size(); }
  /// Entries ascending by main variable.
  const std::vector<MultiPoly>& polys() const { return polys_; }

  bool has_var(int v) const;
  /// The entry with main variable v; throws precondition_error when absent.
  const MultiPoly& poly_at(int v) const;
  /// Degree of poly_at(v) in v.
  int main_degree(int v) const;
  /// Main variables, ascending.
  std::vector<int> mvars() const;

  /// Entries with main variable strictly below (resp. above) v.
  RegularChain below(int v) const;
  RegularChain above(int v) const;

  /// New chain with P inserted; throws precondition_error when mvar(P) is
  /// already present.
  RegularChain extend(const MultiPoly& P) const;

  /// Every context variable is algebraic.
  bool zero_dimensional() const { return zero_dim_; }
  /// Every entry is monic in its main variable.
  bool normalized() const { return normalized_; }

  /// Explicit regularity test for the initials: iter_res of each initial
  /// against the part of the chain below it is nonzero. Only decisive when
  /// those lower parts are zero-dimensional over their variables; intended
  /// for tests and debug assertions.
  bool check_initials_regular() const;

 private:
  CtxPtr ctx_;
  std::vector<MultiPoly> polys_;
  bool zero_dim_ = false;
  bool normalized_ = true;
};

/// Branch tag: whether the tested polynomial vanishes identically on the
/// branch (null) or is invertible there (regular).
enum class RegTag { null, regular };

struct TaggedChain {
  RegTag tag;
  RegularChain chain;
};

/// A splitting of one chain into finitely many refining it: same main
/// variables, and every zero of the original survives in exactly the union
/// of the branches.
using SplitResult = std::vector<TaggedChain>;

/// Iterated pseudo-remainder by the chain entries, highest main variable
/// first.
MultiPoly prem_chain(const MultiPoly& P, const RegularChain& T);

/// Iterated resultant: eliminates each chain variable top-down with
/// resultant(., T_v, v).
MultiPoly iter_res(const MultiPoly& P, const RegularChain& T);

/// P lies in the saturated ideal of T, i.e. prem_chain(P, T) == 0.
bool is_null_mod_sat(const MultiPoly& P, const RegularChain& T);

/// P is invertible modulo the zero-dimensional chain T, decided by
/// iter_res(P, T) != 0. Throws unsupported_error when T is not
/// zero-dimensional (the resultant test is only decisive there).
bool is_regular_resultant_test(const MultiPoly& P, const RegularChain& T);

/// Fully reduced representative of P modulo the ideal of the monic chain T:
/// the degree in every algebraic variable drops below the chain degree,
/// variables outside mvar(T) pass through coefficient-wise, and
/// P - normal_form(P, T) lies in the ideal generated by T. Linear in P over
/// the base field. Throws precondition_error when T is not normalized.
MultiPoly normal_form(const MultiPoly& P, const RegularChain& T);

/// Inverse of P modulo the ideal of the normalized chain T, which must be
/// algebraic in every variable P involves. Computed by a monic extended
/// Euclidean sequence in the top variable whose leading-coefficient
/// inversions recurse into the lower tower. Throws not_invertible_error when
/// the sequence hits a zero-divisor: the witness is always a genuine
/// zero-divisor modulo T, but P itself may still be a unit whose inverse is
/// only reachable after splitting the chain at the witness (the caller's
/// job). A non-unit P always throws. Throws internal_error when P reduces
/// to zero (callers must not invert null elements).
MultiPoly inverse_mod(const MultiPoly& P, const RegularChain& T);

/// Monic representative: normal_form(init(P)^{-1} * P, T). The initial of P
/// must involve only variables algebraic in T; not_invertible_error
/// propagates from the tower inversion (see inverse_mod: a throw demands a
/// split, it does not prove the initial is a non-unit). A nonzero constant
/// normalizes to 1.
MultiPoly normalize(const MultiPoly& P, const RegularChain& T);

/// Conservative radicality certificate: true only for a chain made of a
/// single squarefree entry with constant coefficients in its main variable.
/// False proves nothing.
bool provably_radical(const RegularChain& T);

}  // namespace tricube
