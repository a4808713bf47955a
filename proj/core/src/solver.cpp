#include "tricube/solver.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tricube/densepoly.hpp"
#include "tricube/scube.hpp"

namespace tricube {

namespace {

// The single variable of a y-free non-constant polynomial. A residue in two
// or more low variables is outside the supported scope: constraints must stay
// univariate so they can be folded by univariate gcds.
int sole_var(const MultiPoly& f) {
  int found = -1;
  int n = static_cast<int>(f.ctx()->vars.size());
  for (int v = 0; v < n; ++v) {
    if (f.degree(v) <= 0) continue;
    if (found >= 0)
      throw unsupported_error(
          "residual constraint involves several variables (" +
          f.ctx()->vars[found] + ", " + f.ctx()->vars[v] +
          "); only one free variable below the main one is supported");
    found = v;
  }
  if (found < 0) throw internal_error("expected a non-constant constraint");
  return found;
}

MultiPoly lift1(const CtxPtr& ctx, int w, const DensePoly1& d) {
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(d.c.size());
  for (Fp c : d.c)
    coeffs.push_back(MultiPoly::from_int(ctx, static_cast<long long>(c.v)));
  return MultiPoly::from_univar(ctx, w, coeffs);
}

// Monic squarefree part of a non-constant univariate polynomial.
MultiPoly monic_sqf(const MultiPoly& f) {
  int w = sole_var(f);
  const PrimeField& F = f.ctx()->field;
  DensePoly1 s = dp_from_u64(F, {1});
  for (const SquarefreePart& part : dp_squarefree(F, f.to_dense1(w)))
    s = dp_mul(F, s, part.factor);
  return lift1(f.ctx(), w, s);
}

long long chain_weight(const RegularChain& T) {
  long long d = 1;
  for (const MultiPoly& t : T.polys()) d *= t.main_degree();
  return d;
}

std::string chain_key(const RegularChain& T) {
  std::string k;
  for (const MultiPoly& t : T.polys()) {
    k += t.canonical_bytes();
    k += '\x00';
  }
  return k;
}

// prem_chain-equivalent null test for two-variable chains, in dense
// univariate arithmetic. Coefficients stay reduced modulo the (monic, after
// scaling by its unit initial) x1 entry throughout: each such reduction only
// subtracts ideal elements and introduces no initial factors, so nullity
// modulo sat(T) is unchanged while degrees stay bounded. The generic prem
// tower is quadratic in the base degree here and dominates large solves.
bool absorbed2(const MultiPoly& f0, const RegularChain& T) {
  const CtxPtr& ctx = f0.ctx();
  const PrimeField& F = ctx->field;
  if (f0.is_zero()) return true;

  DensePoly1 m;
  if (T.has_var(0)) {
    m = T.poly_at(0).to_dense1(0);
    if (dp_lc(m).v != 1) m = dp_scale(F, m, F.inv(dp_lc(m)));
  }
  auto redm = [&](DensePoly1 d) {
    if (dp_is_zero(m) || dp_is_zero(d)) return d;
    return dp_rem(F, d, m);
  };

  int dy = (f0.is_constant() || f0.mvar() != 1) ? 0 : f0.degree(1);
  std::vector<DensePoly1> r(static_cast<std::size_t>(dy) + 1);
  for (int k = 0; k <= dy; ++k)
    r[static_cast<std::size_t>(k)] = redm(f0.coeff_in(1, k).to_dense1(0));

  if (T.has_var(1)) {
    const MultiPoly& g = T.poly_at(1);
    int dg = g.degree(1);
    std::vector<DensePoly1> gc(static_cast<std::size_t>(dg) + 1);
    for (int k = 0; k <= dg; ++k)
      gc[static_cast<std::size_t>(k)] = redm(g.coeff_in(1, k).to_dense1(0));
    const DensePoly1& lc = gc[static_cast<std::size_t>(dg)];
    if (dp_is_zero(lc)) return is_null_mod_sat(f0, T);  // not a valid branch

    int top = dy;
    auto settle = [&] {
      while (top >= 0 && dp_is_zero(r[static_cast<std::size_t>(top)])) --top;
    };
    settle();
    while (top >= dg) {
      DensePoly1 lead = std::move(r[static_cast<std::size_t>(top)]);
      for (int k = 0; k < top; ++k)
        r[static_cast<std::size_t>(k)] =
            redm(dp_mul(F, r[static_cast<std::size_t>(k)], lc));
      r[static_cast<std::size_t>(top)] = DensePoly1{};
      for (int j = 0; j < dg; ++j) {
        std::size_t at = static_cast<std::size_t>(top - dg + j);
        r[at] = redm(dp_sub(F, r[at], dp_mul(F, lead, gc[static_cast<std::size_t>(j)])));
      }
      settle();
    }
  }

  for (const DensePoly1& row : r)
    if (!dp_is_zero(row)) return false;
  return true;
}

// f pseudo-reduces to zero through T, i.e. lies in sat(T).
bool absorbed(const MultiPoly& f, const RegularChain& T) {
  if (f.ctx()->vars.size() == 2) return absorbed2(f, T);
  return is_null_mod_sat(f, T);
}

// Every polynomial of U pseudo-reduces to zero through T, so the zero set of
// sat(T) sits inside V(U). Decisive as a variety containment only when T is
// normalized (its chain zero set equals the zero set of sat(T)).
bool covered_by(const RegularChain& T, const RegularChain& U) {
  for (const MultiPoly& f : U.polys())
    if (!absorbed(f, T)) return false;
  return true;
}

class Solver {
 public:
  Solver(const MultiPoly& P, const MultiPoly& Q, const SolveOptions& opts)
      : ctx_(P.ctx()), y_(P.mvar()), opts_(opts), eng_(opts.reg),
        p0_(P), q0_(Q) {
    eng_.set_recording(opts.record_gcds);
  }

  Decomposition run() {
    push_task(MultiPoly::zero(ctx_), p0_, q0_, "top");
    while (!work_.empty()) {
      Task t = std::move(work_.back());
      work_.pop_back();
      process(std::move(t));
    }
    return finish();
  }

 private:
  struct Task {
    MultiPoly m;  // univariate monic squarefree constraint; zero = none
    MultiPoly a;  // remaining equations; zero = satisfied
    MultiPoly b;
    std::string trail;
  };

  void push_task(MultiPoly m, MultiPoly a, MultiPoly b, std::string trail) {
    work_.push_back(Task{std::move(m), std::move(a), std::move(b),
                         std::move(trail)});
  }

  // Both inputs must vanish on every chain ever emitted; a violation means a
  // branch was derived unsoundly, so it is checked on the spot.
  void emit(RegularChain T, std::string note) {
    if (!absorbed(p0_, T) || !absorbed(q0_, T))
      throw internal_error("emitted chain does not absorb the input system");
    chains_.push_back(std::move(T));
    notes_.push_back(std::move(note));
  }

  bool yfree(const MultiPoly& f) const {
    return !f.is_zero() && (f.is_constant() || f.mvar() != y_);
  }

  // gcd-fold a y-free equation into the running constraint. Returns a monic
  // squarefree (possibly constant) polynomial cutting out exactly the points
  // satisfying both.
  MultiPoly combine(const MultiPoly& m, const MultiPoly& c) {
    if (m.is_zero()) return monic_sqf(c);
    int w = sole_var(m);
    if (sole_var(c) != w)
      throw unsupported_error(
          "constraints in two different low variables; only one free "
          "variable below the main one is supported");
    const PrimeField& F = ctx_->field;
    return lift1(ctx_, w, dp_gcd(F, m.to_dense1(w), c.to_dense1(w)));
  }

  void process(Task t) {
    if (!t.m.is_zero() && t.m.is_constant()) return;  // nothing satisfies it
    MultiPoly m = t.m, a = t.a, b = t.b;
    // Fold y-free equations into the constraint; nonzero constants kill the
    // branch outright.
    for (MultiPoly* f : {&a, &b}) {
      if (!yfree(*f)) continue;
      if (f->is_constant()) return;
      m = combine(m, *f);
      if (m.is_constant()) return;
      *f = MultiPoly::zero(ctx_);
    }
    if (a.is_zero()) std::swap(a, b);
    if (a.is_zero()) {
      if (m.is_zero())
        throw internal_error("task degenerated to the whole space");
      emit(RegularChain::make(ctx_, {m}), t.trail + "; constraint only");
      return;
    }
    if (b.is_zero()) {
      single(m, a, t.trail);
      return;
    }
    if (m.is_zero())
      main_free(a, b, t.trail);
    else
      main_constrained(m, a, b, t.trail);
  }

  // One equation with main variable y under an optional constraint.
  void single(const MultiPoly& m, const MultiPoly& a, const std::string& trail) {
    const PrimeField& F = ctx_->field;
    MultiPoly h = a.initial();
    if (m.is_zero()) {
      if (h.is_constant()) {
        emit(RegularChain::make(ctx_, {a.scale(F.inv(h.constant_value()))}),
             trail + "; single equation");
      } else {
        emit(RegularChain::make(ctx_, {a}),
             trail + "; single equation, open initial");
        push_task(monic_sqf(h), a.reductum(), MultiPoly::zero(ctx_),
                  trail + "; initial of the single equation");
      }
      return;
    }
    int w = sole_var(m);
    if (h.is_constant()) {
      RegularChain M = RegularChain::make(ctx_, {m});
      emit(RegularChain::make(ctx_, {m, normalize(normal_form(a, M), M)}),
           trail + "; single equation over the constraint");
      return;
    }
    if (sole_var(h) != w)
      throw unsupported_error(
          "initial and constraint live in different low variables; only one "
          "free variable below the main one is supported");
    DensePoly1 md = m.to_dense1(w);
    DensePoly1 g = dp_gcd(F, md, h.to_dense1(w));
    DensePoly1 m2 = dp_divrem(F, md, g).first;
    if (dp_deg(m2) >= 1) {
      MultiPoly m2p = lift1(ctx_, w, m2);
      RegularChain M2 = RegularChain::make(ctx_, {m2p});
      emit(RegularChain::make(ctx_, {m2p, normalize(normal_form(a, M2), M2)}),
           trail + "; constraint part with live initial");
    }
    if (dp_deg(g) >= 1)
      push_task(lift1(ctx_, w, g), a.reductum(), MultiPoly::zero(ctx_),
                trail + "; constraint part killing the initial");
  }

  // Two equations in y, no constraint yet: resultant elimination.
  void main_free(MultiPoly a, MultiPoly b, const std::string& trail) {
    if (a.degree(y_) < b.degree(y_)) std::swap(a, b);
    ScubeOptions sopts;
    sopts.seed = opts_.reg.seed;
    sopts.grid = opts_.reg.grid;
    auto prov = make_provider(a, b, y_, sopts);
    const MultiPoly& R = prov->resultant();

    if (R.is_zero()) {
      // The pair shares a factor of positive degree in y. Its zero set plus
      // the points where its initial vanishes cover all common zeros: any
      // combination of the inputs vanishes on every common zero, and the gcd
      // divides both inputs once its initial is inverted.
      auto pairs = eng_.regular_gcd(a, b, RegularChain::empty(ctx_), *prov);
      for (const GcdPair& pr : pairs) {
        if (pr.g.is_constant() || pr.g.mvar() != y_)
          throw internal_error(
              "zero resultant without a positive-degree common factor");
        emit(RegularChain::make(ctx_, {pr.g}), trail + "; common factor");
        MultiPoly h = pr.g.initial();
        if (!h.is_constant())
          push_task(monic_sqf(h), a, b, trail + "; initial of common factor");
      }
      return;
    }

    if (!R.is_constant()) {
      int w = sole_var(R);  // multivariate resultant: out of scope
      const PrimeField& F = ctx_->field;
      auto parts = dp_squarefree(F, R.to_dense1(w));
      for (const SquarefreePart& part : parts) {
        if (dp_deg(part.factor) < 1) continue;
        push_task(lift1(ctx_, w, part.factor), a, b,
                  trail + "; resultant factor (multiplicity " +
                      std::to_string(part.multiplicity) + ")");
      }
    }
    // Either way the locus where an initial vanishes is re-solved with the
    // corresponding equation truncated; the y-degree sum strictly drops.
    MultiPoly ha = a.initial();
    if (!ha.is_constant())
      push_task(monic_sqf(ha), a.reductum(), b,
                trail + "; initial of first equation");
    MultiPoly hb = b.initial();
    if (!hb.is_constant())
      push_task(monic_sqf(hb), a, b.reductum(),
                trail + "; initial of second equation");
  }

  // Two equations in y over a nonzero univariate constraint: gcd over the
  // zero-dimensional chain {m}, after making both initials regular there.
  void main_constrained(const MultiPoly& m, const MultiPoly& a,
                        const MultiPoly& b, const std::string& trail) {
    RegularChain M = RegularChain::make(ctx_, {m});
    for (const InitialPair& ia : eng_.regularize_initial(a, M)) {
      const RegularChain& W = ia.chain;
      const MultiPoly& a1 = ia.poly;
      MultiPoly wp = W.polys()[0];
      if (a1.is_zero()) {
        push_task(wp, b, MultiPoly::zero(ctx_),
                  trail + "; first equation vanished");
        continue;
      }
      if (a1.is_constant()) continue;
      if (a1.mvar() != y_) {
        MultiPoly u = combine(wp, a1);
        if (!u.is_constant())
          push_task(u, b, MultiPoly::zero(ctx_),
                    trail + "; first equation became a constraint");
        continue;
      }
      for (const InitialPair& ib : eng_.regularize_initial(b, W)) {
        const RegularChain& U = ib.chain;
        const MultiPoly& b1 = ib.poly;
        MultiPoly up = U.polys()[0];
        if (b1.is_zero()) {
          MultiPoly a2 = normal_form(a1, U);
          emit(RegularChain::make(ctx_, {up, normalize(a2, U)}),
               trail + "; second equation vanished");
          continue;
        }
        if (b1.is_constant()) continue;
        if (b1.mvar() != y_) {
          MultiPoly u = combine(up, b1);
          if (u.is_constant()) continue;
          RegularChain Uu = RegularChain::make(ctx_, {u});
          MultiPoly a2 = normal_form(a1, Uu);
          emit(RegularChain::make(ctx_, {u, normalize(a2, Uu)}),
               trail + "; second equation became a constraint");
          continue;
        }
        // Both initials regular over U: the engine caches the subresultant
        // cube per input pair, so sibling branches reuse one evaluation.
        for (const GcdPair& pr : eng_.regular_gcd(a1, b1, U)) {
          if (pr.g.is_constant() || pr.g.mvar() != y_) continue;  // coprime
          std::vector<MultiPoly> polys = pr.chain.polys();
          polys.push_back(pr.g);
          emit(RegularChain::make(ctx_, std::move(polys)),
               trail + "; gcd branch");
        }
      }
    }
  }

  Decomposition finish() {
    // Exact duplicates first, then containment pruning smallest-first. A
    // normalized chain's zero set equals its saturated ideal's, so coverage
    // by another kept chain makes it redundant; chains with open initials
    // are never pruned by coverage (their chain zero set is larger).
    std::vector<std::size_t> keep;
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < chains_.size(); ++i)
      if (seen.emplace(chain_key(chains_[i]), i).second) keep.push_back(i);

    std::sort(keep.begin(), keep.end(), [&](std::size_t i, std::size_t j) {
      long long wi = chain_weight(chains_[i]), wj = chain_weight(chains_[j]);
      if (wi != wj) return wi < wj;
      return chain_key(chains_[i]) < chain_key(chains_[j]);
    });
    // Coverage pruning stays within normalized chains: there the chain zero
    // set, the saturated ideal's zero set, and the quasi-component closure
    // all coincide, so dropping a covered chain loses no described point.
    std::vector<bool> alive(keep.size(), true);
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (!chains_[keep[i]].normalized()) continue;
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if (j == i || !alive[j] || !chains_[keep[j]].normalized()) continue;
        if (covered_by(chains_[keep[i]], chains_[keep[j]])) {
          alive[i] = false;
          break;
        }
      }
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (alive[i]) kept.push_back(keep[i]);

    std::sort(kept.begin(), kept.end(), [&](std::size_t i, std::size_t j) {
      if (chains_[i].size() != chains_[j].size())
        return chains_[i].size() < chains_[j].size();
      return chain_key(chains_[i]) < chain_key(chains_[j]);
    });

    Decomposition out;
    for (std::size_t idx : kept) {
      out.chains.push_back(std::move(chains_[idx]));
      out.notes.push_back(std::move(notes_[idx]));
    }
    if (opts_.record_gcds) out.gcd_log = eng_.gcd_log();
    return out;
  }

  CtxPtr ctx_;
  int y_;
  SolveOptions opts_;
  RegOps eng_;
  MultiPoly p0_;
  MultiPoly q0_;
  std::vector<Task> work_;
  std::vector<RegularChain> chains_;
  std::vector<std::string> notes_;
};

}  // namespace

Decomposition solve_two_eqs(const MultiPoly& P, const MultiPoly& Q,
                            const SolveOptions& opts) {
  check_same_ctx(P, Q);
  if (P.is_constant() || Q.is_constant())
    throw precondition_error("solve_two_eqs: both equations must be non-constant");
  if (P.mvar() != Q.mvar())
    throw precondition_error(
        "solve_two_eqs: equations must share their main variable");
  Solver s(P, Q, opts);
  return s.run();
}

Decomposition triangularize_bivariate(const MultiPoly& P, const MultiPoly& Q,
                                      const SolveOptions& opts) {
  if (P.ctx()->vars.size() != 2)
    throw precondition_error(
        "triangularize_bivariate: context must have exactly two variables");
  return solve_two_eqs(P, Q, opts);
}

}  // namespace tricube
