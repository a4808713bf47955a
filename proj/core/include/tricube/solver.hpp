#pragma once

#include <string>
#include <vector>

#include "tricube/mpoly.hpp"
#include "tricube/regchain.hpp"
#include "tricube/regops.hpp"

namespace tricube {

/// Knobs for the two-equation solver. `reg` is forwarded to the splitting
/// engine shared by every branch of the computation; `record_gcds` keeps the
/// engine's gcd emission log in the result for postcondition audits.
struct SolveOptions {
  RegOpts reg;
  bool record_gcds = false;
};

/// Triangular decomposition of a pair of equations. `chains[i]` and
/// `notes[i]` are parallel: the note says which branch of the computation
/// produced the chain (resultant factor, common-factor branch, initial
/// recursion). Every output chain satisfies the containment invariant:
/// both input polynomials pseudo-reduce to zero through it.
struct Decomposition {
  std::vector<RegularChain> chains;
  std::vector<std::string> notes;
  std::vector<GcdRecord> gcd_log;  // populated when record_gcds is set
};

/// Decomposes V(P, Q) into regular chains. P and Q must be non-constant with
/// the same main variable y. The variety is covered as the union of the
/// emitted chains' zero sets, and points of a chain where no initial of that
/// chain vanishes are genuine common zeros.
///
/// Scope: every residual constraint produced below y must stay univariate.
/// Bivariate input always qualifies; with more variables below y the solver
/// throws unsupported_error as soon as a multivariate residue appears
/// (non-constant resultants or initials in two or more low variables).
Decomposition solve_two_eqs(const MultiPoly& P, const MultiPoly& Q,
                            const SolveOptions& opts = {});

/// Bivariate specialization: requires the context to have exactly two
/// variables. Emitted algebraic gcds are normalized (monic over their
/// branch), so zero-dimensional output chains are monic towers.
Decomposition triangularize_bivariate(const MultiPoly& P, const MultiPoly& Q,
                                      const SolveOptions& opts = {});

}  // namespace tricube
