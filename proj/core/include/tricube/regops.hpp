#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tricube/mpoly.hpp"
#include "tricube/regchain.hpp"
#include "tricube/scube.hpp"

namespace tricube {

struct RegOpts {
  /// Treat every chain as radical: candidate gcds are accepted without the
  /// diagonal splitting pass over the higher principal coefficients.
  bool assume_radical = false;
  uint64_t seed = 0;
  /// Hard cap on branch expansions per top-level call; exceeding it raises
  /// unsupported_error instead of looping on a pathological split cascade.
  std::size_t branch_cap = 10000;
  GridPrefs grid;
};

/// One branch of an initial regularization: poly is congruent to the input
/// modulo the saturated ideal of chain, and is either a constant or has a
/// regular initial there.
struct InitialPair {
  MultiPoly poly;
  RegularChain chain;
};

/// One branch of a gcd computation: g lies in the ideal generated by the two
/// inputs plus the saturated ideal of chain, its initial is regular there,
/// and when deg(g) > 0 it pseudo-divides both inputs to zero modulo chain.
struct GcdPair {
  MultiPoly g;
  RegularChain chain;
};
using RegularGcdSequence = std::vector<GcdPair>;

/// A gcd emission together with the input pair it answered, kept when
/// recording is switched on (postcondition audits replay these).
struct GcdRecord {
  MultiPoly p;
  MultiPoly q;
  int y;  // variable the gcd was taken in; deg(g, y) == 0 certifies coprimality
  MultiPoly g;
  RegularChain chain;
};

/// Splitting engine over regular chains. Every question about an element
/// modulo a saturated ideal (is it null? is it regular? what does it share
/// with a chain entry?) is answered by refining the chain until the answer
/// is uniform per branch; each refinement preserves the union of the
/// branches' zero sets and the total chain degree.
///
/// Branches are emitted in discovery order, deterministic for a fixed seed.
/// One subresultant provider per polynomial pair is cached and shared across
/// the mutually recursive operations. Not thread safe: use one engine per
/// thread of control.
class RegOps {
 public:
  explicit RegOps(RegOpts opts = {}) : opts_(opts) {}

  /// Splits T so that per branch exactly one of the two certificates holds:
  /// prem_chain(P, T_i) = 0 (null) or iter_res(P, T_i) != 0 (regular).
  /// Requires a normalized chain whose entries involve only its own main
  /// variables; variables of P the chain leaves free are handled through the
  /// coefficient criterion (P is regular as soon as one coefficient in a
  /// free variable is, null when all of them are). Chains outside that scope
  /// get a single branch when one certificate already holds, otherwise
  /// unsupported_error: splitting them is out of scope here.
  SplitResult regularize(const MultiPoly& P, const RegularChain& T);

  /// Splits T and rewrites P per branch so every emitted polynomial is a
  /// constant or has a regular initial, staying congruent to P modulo the
  /// saturated ideal of its branch. Peels one leading coefficient per round:
  /// where the initial is null the leading term drops out and the next
  /// coefficient is examined, so the main degree strictly decreases.
  /// Requires T normalized with entries algebraic in its main variables.
  std::vector<InitialPair> regularize_initial(const MultiPoly& P,
                                              const RegularChain& T);

  /// Regular gcd sequence of P and Q in their shared main variable over T.
  /// Splits T; on branches where the resultant of the pair stays regular the
  /// reduced resultant itself is emitted (a degree-zero coprimality
  /// certificate), elsewhere the subresultant rows are scanned bottom-up for
  /// the first one with a regular principal coefficient. Emitted positive-
  /// degree gcds are reduced and made monic whenever the initial involves
  /// only variables algebraic in the branch (always the case for a chain
  /// covering every non-main variable); a candidate whose normalization hits
  /// a zero-divisor splits the branch and retries. Requires mvar(P) =
  /// mvar(Q) strictly above every chain variable, a normalized chain with
  /// entries algebraic in its main variables, and both initials regular
  /// modulo the saturated ideal (checked; precondition_error otherwise).
  RegularGcdSequence regular_gcd(const MultiPoly& P, const MultiPoly& Q,
                                 const RegularChain& T);
  /// Same, reusing an already built provider for the pair. The provider must
  /// be oriented deg(P) >= deg(Q) in the shared main variable.
  RegularGcdSequence regular_gcd(const MultiPoly& P, const MultiPoly& Q,
                                 const RegularChain& T, SubresProvider& prov);

  void set_recording(bool on) { recording_ = on; }
  const std::vector<GcdRecord>& gcd_log() const { return gcd_log_; }
  void clear_gcd_log() { gcd_log_.clear(); }

 private:
  SplitResult regularize_impl(const MultiPoly& P, const RegularChain& T);
  SplitResult algebraic_split(const MultiPoly& P, const RegularChain& T);
  SplitResult coefficient_split(const MultiPoly& P, const RegularChain& T);
  std::vector<InitialPair> reginit_impl(const MultiPoly& P,
                                        const RegularChain& T);
  RegularGcdSequence rgcd_impl(const MultiPoly& P, const MultiPoly& Q, int y,
                               const RegularChain& T, SubresProvider& prov);
  SubresProvider& provider_for(const MultiPoly& A, const MultiPoly& B, int y);
  void charge();

  RegOpts opts_;
  std::size_t spent_ = 0;
  bool recording_ = false;
  std::vector<GcdRecord> gcd_log_;
  std::map<std::string, std::unique_ptr<SubresProvider>> providers_;
};

}  // namespace tricube
