#include "tricube/regops.hpp"

#include <functional>
#include <tuple>
#include <utility>

namespace tricube {

namespace {

// Every variable occurring in f is a main variable of T.
bool algebraic_only(const MultiPoly& f, const RegularChain& T) {
  int n = static_cast<int>(f.ctx()->vars.size());
  for (int v = 0; v < n; ++v)
    if (f.degree(v) > 0 && !T.has_var(v)) return false;
  return true;
}

// Every entry of T involves only main variables of T (so the residue ring is
// a finite tower over the base field).
bool chain_self_contained(const RegularChain& T) {
  for (const MultiPoly& t : T.polys())
    if (!algebraic_only(t, T)) return false;
  return true;
}

bool chains_equal(const RegularChain& A, const RegularChain& B) {
  if (A.size() != B.size()) return false;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (!(A.polys()[i] == B.polys()[i])) return false;
  return true;
}

RegularChain join(const RegularChain& low, const MultiPoly& mid,
                  const RegularChain& high) {
  std::vector<MultiPoly> all = low.polys();
  all.push_back(mid);
  for (const MultiPoly& t : high.polys()) all.push_back(t);
  return RegularChain::make(mid.ctx(), std::move(all));
}

// Exact quotient of A by B in v modulo the chain ideal of E. A must be
// reduced, B monic in v with reduced coefficients; the remainder is required
// to vanish, anything else is a broken divisibility invariant upstream.
MultiPoly exact_quo(const MultiPoly& A, const MultiPoly& B, int v,
                    const RegularChain& E) {
  if (!B.initial().is_constant())
    throw internal_error("cofactor division by a non-monic divisor");
  int db = B.degree(v);
  MultiPoly quo = MultiPoly::zero(A.ctx());
  MultiPoly r = A;
  while (!r.is_zero() && r.degree(v) >= db) {
    MultiPoly t =
        r.coeff_in(v, r.degree(v)) * MultiPoly::var(r.ctx(), v, r.degree(v) - db);
    quo = quo + t;
    r = normal_form(r - t * B, E);
  }
  if (!r.is_zero())
    throw internal_error("cofactor division left a nonzero remainder");
  return quo;
}

void guard_ctx(const MultiPoly& P, const RegularChain& T) {
  if (!T.ctx() || P.ctx() != T.ctx())
    throw internal_error("polynomial and chain from different contexts");
}

}  // namespace

void RegOps::charge() {
  if (++spent_ > opts_.branch_cap)
    throw unsupported_error(
        "branch budget exceeded (" + std::to_string(opts_.branch_cap) +
        " expansions): the split cascade is too deep for this configuration");
}

SubresProvider& RegOps::provider_for(const MultiPoly& A, const MultiPoly& B,
                                     int y) {
  std::string key = A.canonical_bytes();
  key.push_back('\x01');
  key += B.canonical_bytes();
  auto it = providers_.find(key);
  if (it == providers_.end()) {
    ScubeOptions so;
    so.seed = opts_.seed;
    so.grid = opts_.grid;
    it = providers_.emplace(key, make_provider(A, B, y, so)).first;
  }
  return *it->second;
}

SplitResult RegOps::regularize(const MultiPoly& P, const RegularChain& T) {
  guard_ctx(P, T);
  spent_ = 0;
  return regularize_impl(P, T);
}

SplitResult RegOps::regularize_impl(const MultiPoly& P,
                                    const RegularChain& T) {
  charge();
  if (T.is_empty())
    return {{P.is_zero() ? RegTag::null : RegTag::regular, T}};
  if (!T.normalized() || !chain_self_contained(T)) {
    // Out of splitting scope: answer only when a certificate already holds.
    if (is_null_mod_sat(P, T)) return {{RegTag::null, T}};
    if (!iter_res(P, T).is_zero()) return {{RegTag::regular, T}};
    throw unsupported_error(
        "regularity over this chain needs a split it does not support "
        "(non-normalized or not algebraic over its main variables)");
  }
  MultiPoly r = normal_form(P, T);
  if (r.is_constant() || algebraic_only(r, T)) return algebraic_split(r, T);
  return coefficient_split(r, T);
}

// P involves a variable the chain leaves free: P is regular as soon as one
// coefficient with respect to the highest such variable is regular, and null
// exactly when all of them are null. Scanned from the top coefficient down,
// splitting as needed, so each final branch certifies one way or the other.
SplitResult RegOps::coefficient_split(const MultiPoly& P,
                                      const RegularChain& T) {
  int w = -1;
  int n = static_cast<int>(P.ctx()->vars.size());
  for (int v = 0; v < n; ++v)
    if (P.degree(v) > 0 && !T.has_var(v)) w = v;
  std::vector<MultiPoly> coeffs = P.to_univar(w);
  SplitResult out;
  std::function<void(const RegularChain&, int)> rec =
      [&](const RegularChain& U, int k) {
        if (k < 0) {
          out.push_back({RegTag::null, U});
          return;
        }
        MultiPoly c = normal_form(coeffs[static_cast<std::size_t>(k)], U);
        if (c.is_zero()) {
          rec(U, k - 1);
          return;
        }
        for (TaggedChain& br : regularize_impl(c, U)) {
          if (br.tag == RegTag::regular)
            out.push_back({RegTag::regular, std::move(br.chain)});
          else
            rec(br.chain, k - 1);
        }
      };
  rec(T, static_cast<int>(coeffs.size()) - 1);
  return out;
}

std::vector<InitialPair> RegOps::regularize_initial(const MultiPoly& P,
                                                    const RegularChain& T) {
  guard_ctx(P, T);
  spent_ = 0;
  if (!T.normalized() || !chain_self_contained(T))
    throw precondition_error(
        "initial regularization needs a normalized chain algebraic over its "
        "main variables");
  return reginit_impl(P, T);
}

std::vector<InitialPair> RegOps::reginit_impl(const MultiPoly& P,
                                              const RegularChain& T) {
  std::vector<InitialPair> out;
  std::function<void(MultiPoly, const RegularChain&)> rec =
      [&](MultiPoly f, const RegularChain& U) {
        charge();
        if (f.is_constant() || f.initial().is_constant()) {
          out.push_back({std::move(f), U});
          return;
        }
        MultiPoly h = f.initial();
        for (TaggedChain& br : regularize_impl(h, U)) {
          MultiPoly fw = normal_form(f, br.chain);
          if (br.tag == RegTag::regular)
            out.push_back({std::move(fw), std::move(br.chain)});
          else
            rec(std::move(fw), br.chain);  // leading term died: degree drops
        }
      };
  rec(normal_form(P, T), T);
  return out;
}

// Case split over a chain covering every variable of P. Constants answer
// directly. Otherwise P is rewritten until its initial is regular, and the
// resultant of P with the chain entry in mvar(P) decides: where it stays
// regular P is invertible modulo the branch; where it vanishes the shared
// part g of P and the entry is split off (P null there) and the cofactor
// entry/g carries the rest of the branch, on which P is examined again.
SplitResult RegOps::algebraic_split(const MultiPoly& P,
                                    const RegularChain& T) {
  SplitResult out;
  for (InitialPair& ip : reginit_impl(P, T)) {
    if (ip.poly.is_constant()) {
      out.push_back(
          {ip.poly.is_zero() ? RegTag::null : RegTag::regular,
           std::move(ip.chain)});
      continue;
    }
    const MultiPoly& q = ip.poly;
    const RegularChain& C = ip.chain;
    int v = q.main_var();
    const MultiPoly& Cv = C.poly_at(v);  // deg(q, v) < deg(Cv, v): q is reduced
    SubresProvider& prov = provider_for(Cv, q, v);
    RegularChain lowC = C.below(v);
    RegularChain highC = C.above(v);
    for (TaggedChain& rb : regularize_impl(prov.resultant(), lowC)) {
      if (rb.tag == RegTag::regular) {
        out.push_back({RegTag::regular, join(rb.chain, Cv, highC)});
        continue;
      }
      for (GcdPair& gp : rgcd_impl(Cv, q, v, rb.chain, prov)) {
        if (gp.g.degree(v) == 0)
          throw internal_error(
              "degree-zero gcd on a branch with a null resultant");
        out.push_back({RegTag::null, join(gp.chain, gp.g, highC)});
        MultiPoly c = exact_quo(normal_form(Cv, gp.chain), gp.g, v, gp.chain);
        if (c.degree(v) > 0) {
          RegularChain next = join(gp.chain, c, highC);
          for (TaggedChain& sub : regularize_impl(q, next))
            out.push_back(std::move(sub));
        }
      }
    }
  }
  return out;
}

namespace {

// Preconditions shared by the public gcd entry points; returns the pair
// sorted by main degree plus the shared main variable.
std::tuple<MultiPoly, MultiPoly, int> gcd_inputs(const MultiPoly& P,
                                                 const MultiPoly& Q,
                                                 const RegularChain& T) {
  guard_ctx(P, T);
  guard_ctx(Q, T);
  if (P.is_constant() || Q.is_constant() || P.main_var() != Q.main_var())
    throw precondition_error(
        "gcd needs two non-constant polynomials sharing a main variable");
  int y = P.main_var();
  for (int w : T.mvars())
    if (w >= y)
      throw precondition_error("chain entries must lie below the gcd variable");
  if (!T.normalized() || !chain_self_contained(T))
    throw precondition_error(
        "gcd needs a normalized chain algebraic over its main variables");
  MultiPoly A = P;
  MultiPoly B = Q;
  if (A.degree(y) < B.degree(y)) std::swap(A, B);
  return {std::move(A), std::move(B), y};
}

}  // namespace

RegularGcdSequence RegOps::regular_gcd(const MultiPoly& P, const MultiPoly& Q,
                                       const RegularChain& T) {
  auto [A, B, y] = gcd_inputs(P, Q, T);
  spent_ = 0;
  for (const MultiPoly* f : {&A, &B}) {
    MultiPoly h = f->initial();
    if (h.is_constant()) continue;
    for (TaggedChain& br : regularize_impl(h, T))
      if (br.tag == RegTag::null)
        throw precondition_error(
            "gcd input whose initial is a zero-divisor modulo the chain");
  }
  SubresProvider& prov = provider_for(A, B, y);
  return rgcd_impl(A, B, y, T, prov);
}

RegularGcdSequence RegOps::regular_gcd(const MultiPoly& P, const MultiPoly& Q,
                                       const RegularChain& T,
                                       SubresProvider& prov) {
  auto [A, B, y] = gcd_inputs(P, Q, T);
  spent_ = 0;
  if (prov.var() != y || prov.degp() != A.degree(y) ||
      prov.degq() != B.degree(y))
    throw precondition_error("provider does not match the input pair");
  return rgcd_impl(A, B, y, T, prov);
}

// Bottom-up scan over the subresultant rows of (P, Q), deg(P,y) >= deg(Q,y),
// refining T until every branch either certifies the resultant regular
// (coprime signal, the reduced resultant is emitted) or owns the lowest row
// with a regular principal coefficient (that row is the gcd there).
RegularGcdSequence RegOps::rgcd_impl(const MultiPoly& P, const MultiPoly& Q,
                                     int y, const RegularChain& T,
                                     SubresProvider& prov) {
  RegularGcdSequence out;
  const int qd = prov.degq();

  auto push = [&](MultiPoly g, const RegularChain& W) {
    if (recording_) gcd_log_.push_back({P, Q, y, g, W});
    out.push_back({std::move(g), W});
  };

  // Reduce, then make monic; a zero-divisor pivot during the inversion
  // splits the branch and both halves retry. The initial of the candidate is
  // regular, so every retry strictly refines and the recursion bottoms out.
  std::function<void(const MultiPoly&, const RegularChain&)> emit_norm =
      [&](const MultiPoly& g, const RegularChain& W) {
        charge();
        if (g.is_zero())
          throw internal_error("gcd candidate fell into the chain ideal");
        bool monicable = g.is_constant() || g.initial().is_constant() ||
                         algebraic_only(g.initial(), W);
        if (!monicable) {
          push(g, W);  // left unnormalized: the initial has a free variable
          return;
        }
        try {
          push(normalize(g, W), W);
        } catch (const not_invertible_error& e) {
          SplitResult sp = regularize_impl(e.witness, W);
          if (sp.size() == 1 && chains_equal(sp[0].chain, W))
            throw internal_error("zero-divisor witness failed to split");
          for (TaggedChain& br : sp)
            emit_norm(normal_form(g, br.chain), br.chain);
        }
      };

  auto finalize = [&](int d, const RegularChain& W) {
    emit_norm(normal_form(d == qd ? Q : prov.full(d), W), W);
  };

  // Split every higher principal coefficient until each is null or regular
  // per branch; the formal top coefficient is a power of init(Q) and needs
  // no work. Radical branches skip the pass: a regular principal coefficient
  // alone already certifies the candidate over a radical saturated ideal.
  std::function<void(int, int, const RegularChain&)> diagonal =
      [&](int d, int k, const RegularChain& U) {
        if (k >= qd || opts_.assume_radical || provably_radical(U)) {
          finalize(d, U);
          return;
        }
        if (prov.row_zero(k)) {
          diagonal(d, k + 1, U);
          return;
        }
        for (TaggedChain& br : regularize_impl(prov.principal(k), U))
          diagonal(d, k + 1, br.chain);
      };

  // The whole row S_d lies in the saturated ideal on every returned branch.
  // Its coefficients are nilpotent once the principal one is null, so no
  // branch may ever certify one regular; they vanish after finite splitting.
  std::function<void(int, const RegularChain&, std::vector<RegularChain>&)>
      clear_row = [&](int d, const RegularChain& U,
                      std::vector<RegularChain>& acc) {
        charge();
        MultiPoly f = normal_form(prov.full(d), U);
        if (f.is_zero()) {
          acc.push_back(U);
          return;
        }
        MultiPoly c = f.coeff_in(y, f.degree(y));
        for (TaggedChain& br : regularize_impl(c, U)) {
          if (br.tag == RegTag::regular)
            throw internal_error(
                "nilpotent subresultant coefficient certified regular");
          clear_row(d, br.chain, acc);
        }
      };

  // Invariant: S_k lies in the saturated ideal of U for every k < d.
  std::function<void(const RegularChain&, int)> scan =
      [&](const RegularChain& U, int d) {
        charge();
        if (d == qd) {
          finalize(qd, U);
          return;
        }
        if (prov.row_zero(d)) {
          scan(U, d + 1);
          return;
        }
        for (TaggedChain& br : regularize_impl(prov.principal(d), U)) {
          if (br.tag == RegTag::regular) {
            diagonal(d, d + 1, br.chain);
          } else {
            std::vector<RegularChain> cleared;
            clear_row(d, br.chain, cleared);
            for (RegularChain& W : cleared) scan(W, d + 1);
          }
        }
      };

  for (TaggedChain& br : regularize_impl(prov.resultant(), T)) {
    if (br.tag == RegTag::regular)
      push(normal_form(prov.resultant(), br.chain), br.chain);
    else
      scan(br.chain, 1);
  }
  return out;
}

}  // namespace tricube
