#include "tricube/regchain.hpp"

#include <algorithm>
#include <utility>

#include "tricube/subres.hpp"

namespace tricube {

namespace {

// True when every coefficient of f in v is a base-field constant, so the
// dense univariate routines apply.
bool univar_in(const MultiPoly& f, int v) {
  if (f.is_constant()) return true;
  if (f.main_var() != v) return false;
  for (const MultiPoly& c : f.to_univar(v))
    if (!c.is_constant()) return false;
  return true;
}

}  // namespace

RegularChain RegularChain::empty(CtxPtr ctx) {
  RegularChain T;
  T.ctx_ = std::move(ctx);
  T.zero_dim_ = T.ctx_->vars.empty();
  return T;
}

RegularChain RegularChain::make(CtxPtr ctx, std::vector<MultiPoly> polys) {
  RegularChain T;
  T.ctx_ = std::move(ctx);
  const PrimeField& F = T.ctx_->field;
  for (MultiPoly& p : polys) {
    if (p.is_null() || p.is_constant())
      throw precondition_error("chain entries must be non-constant");
    if (p.ctx() != T.ctx_)
      throw internal_error("chain entry from a different context");
    MultiPoly init = p.initial();
    if (init.is_constant() && init.constant_value().v != 1)
      p = p.scale(F.inv(init.constant_value()));
    T.normalized_ = T.normalized_ && p.initial().is_constant();
  }
  std::sort(polys.begin(), polys.end(),
            [](const MultiPoly& a, const MultiPoly& b) {
              return a.main_var() < b.main_var();
            });
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (polys[i - 1].main_var() == polys[i].main_var())
      throw precondition_error("two chain entries share a main variable");
  T.polys_ = std::move(polys);
  T.zero_dim_ = T.polys_.size() == T.ctx_->vars.size();
  return T;
}

bool RegularChain::has_var(int v) const {
  for (const MultiPoly& p : polys_)
    if (p.main_var() == v) return true;
  return false;
}

const MultiPoly& RegularChain::poly_at(int v) const {
  for (const MultiPoly& p : polys_)
    if (p.main_var() == v) return p;
  throw precondition_error("no chain entry with that main variable");
}

int RegularChain::main_degree(int v) const { return poly_at(v).main_degree(); }

std::vector<int> RegularChain::mvars() const {
  std::vector<int> out;
  out.reserve(polys_.size());
  for (const MultiPoly& p : polys_) out.push_back(p.main_var());
  return out;
}

RegularChain RegularChain::below(int v) const {
  std::vector<MultiPoly> part;
  for (const MultiPoly& p : polys_)
    if (p.main_var() < v) part.push_back(p);
  return make(ctx_, std::move(part));
}

RegularChain RegularChain::above(int v) const {
  std::vector<MultiPoly> part;
  for (const MultiPoly& p : polys_)
    if (p.main_var() > v) part.push_back(p);
  return make(ctx_, std::move(part));
}

RegularChain RegularChain::extend(const MultiPoly& P) const {
  std::vector<MultiPoly> all = polys_;
  all.push_back(P);
  return make(ctx_, std::move(all));
}

bool RegularChain::check_initials_regular() const {
  for (const MultiPoly& p : polys_) {
    MultiPoly init = p.initial();
    if (init.is_constant()) continue;
    if (iter_res(init, below(p.main_var())).is_zero()) return false;
  }
  return true;
}

MultiPoly prem_chain(const MultiPoly& P, const RegularChain& T) {
  MultiPoly r = P;
  const std::vector<MultiPoly>& polys = T.polys();
  for (auto it = polys.rbegin(); it != polys.rend(); ++it)
    r = prem(r, *it, it->main_var()).rem;
  return r;
}

MultiPoly iter_res(const MultiPoly& P, const RegularChain& T) {
  MultiPoly r = P;
  const std::vector<MultiPoly>& polys = T.polys();
  for (auto it = polys.rbegin(); it != polys.rend(); ++it)
    r = resultant(r, *it, it->main_var());
  return r;
}

bool is_null_mod_sat(const MultiPoly& P, const RegularChain& T) {
  return prem_chain(P, T).is_zero();
}

bool is_regular_resultant_test(const MultiPoly& P, const RegularChain& T) {
  // Decisive exactly when the residue ring is artinian over the base field:
  // every variable occurring in P or in a chain entry must be algebraic.
  int n = static_cast<int>(P.ctx()->vars.size());
  for (int w = 0; w < n; ++w) {
    if (T.has_var(w)) continue;
    bool occurs = P.degree(w) > 0;
    for (const MultiPoly& t : T.polys()) occurs = occurs || t.degree(w) > 0;
    if (occurs)
      throw unsupported_error(
          "resultant-based regularity needs every involved variable "
          "algebraic in the chain");
  }
  return !iter_res(P, T).is_zero();
}

namespace {

MultiPoly nf_rec(const MultiPoly& P, const RegularChain& T) {
  if (P.is_constant() || T.is_empty()) return P;
  int v = P.main_var();
  MultiPoly r = P;
  if (T.has_var(v)) {
    const MultiPoly& tv = T.poly_at(v);
    if (univar_in(r, v) && univar_in(tv, v)) {
      const PrimeField& F = P.ctx()->field;
      return MultiPoly::from_dense1(
          P.ctx(), v, dp_rem(F, r.to_dense1(v), tv.to_dense1(v)));
    }
    int dt = tv.main_degree();
    while (!r.is_constant() && r.main_var() == v && r.degree(v) >= dt) {
      int dr = r.degree(v);
      r = r - r.coeff_in(v, dr) * MultiPoly::var(r.ctx(), v, dr - dt) * tv;
    }
  }
  if (r.is_constant() || r.main_var() < v) return nf_rec(r, T);
  RegularChain low = T.below(v);
  if (low.is_empty()) return r;
  std::vector<MultiPoly> coeffs = r.to_univar(v);
  for (MultiPoly& c : coeffs) c = nf_rec(c, low);
  return MultiPoly::from_univar(r.ctx(), v, std::move(coeffs));
}

}  // namespace

MultiPoly normal_form(const MultiPoly& P, const RegularChain& T) {
  if (!T.normalized())
    throw precondition_error("normal_form needs a monic chain");
  return nf_rec(P, T);
}

namespace {

// Plain division by a divisor monic in v, coefficients reduced modulo the
// chain below v after every elimination step. Returns the quotient; the
// remainder is written back into A.
MultiPoly monic_divrem(MultiPoly& A, const MultiPoly& B, int v,
                       const RegularChain& low) {
  int db = B.degree(v);
  MultiPoly quo = MultiPoly::zero(A.ctx());
  A = nf_rec(A, low);  // reduced coefficients make the top term cancel exactly
  while (!A.is_zero() && A.degree(v) >= db) {
    int da = A.degree(v);
    MultiPoly t = A.coeff_in(v, da) * MultiPoly::var(A.ctx(), v, da - db);
    quo = quo + t;
    A = nf_rec(A - t * B, low);
  }
  return quo;
}

MultiPoly inverse_rec(const MultiPoly& P, const RegularChain& T) {
  if (P.is_constant()) {
    const PrimeField& F = P.ctx()->field;
    if (P.is_zero()) throw internal_error("inverting a null element");
    return MultiPoly::constant(P.ctx(), F.inv(P.constant_value()));
  }
  int v = P.main_var();
  if (!T.has_var(v))
    throw precondition_error("inverse of an element with a free variable");
  RegularChain low = T.below(v);

  // Monic extended remainder sequence in v over the lower tower, tracking
  // only the P-cofactor: r_i = s_i * P modulo the chain ideal at every step.
  MultiPoly r0 = T.poly_at(v);
  MultiPoly r1 = P;
  MultiPoly s0 = MultiPoly::zero(P.ctx());
  MultiPoly s1 = MultiPoly::constant(P.ctx(), Fp{1});
  while (true) {
    if (r1.is_zero()) throw not_invertible_error(r0);
    if (r1.is_constant() || r1.main_var() < v) {
      // r1 is a unit of the lower tower times s1, or a zero-divisor whose
      // witness from below splits the whole chain just as well.
      MultiPoly inv = inverse_rec(r1, low);
      return nf_rec(inv * s1, T);
    }
    MultiPoly lc = r1.initial();
    if (!lc.is_constant() || lc.constant_value().v != 1) {
      MultiPoly lcinv = inverse_rec(nf_rec(lc, low), low);
      r1 = nf_rec(lcinv * r1, low);
      s1 = nf_rec(lcinv * s1, low);
    }
    MultiPoly q = monic_divrem(r0, r1, v, low);  // r0 becomes the remainder
    MultiPoly s2 = nf_rec(s0 - q * s1, T);
    std::swap(r0, r1);
    s0 = s1;
    s1 = std::move(s2);
  }
}

}  // namespace

MultiPoly inverse_mod(const MultiPoly& P, const RegularChain& T) {
  if (!T.normalized())
    throw precondition_error("inverse_mod needs a monic chain");
  MultiPoly r = normal_form(P, T);
  if (r.is_zero()) throw internal_error("inverting a null element");
  return inverse_rec(r, T);
}

MultiPoly normalize(const MultiPoly& P, const RegularChain& T) {
  MultiPoly r = normal_form(P, T);
  if (r.is_zero()) throw internal_error("normalizing a null polynomial");
  if (r.is_constant()) return MultiPoly::constant(P.ctx(), Fp{1});
  MultiPoly H = r.initial();
  if (H.is_constant())
    return r.scale(P.ctx()->field.inv(H.constant_value()));
  MultiPoly Hinv = inverse_mod(H, T.below(r.main_var()));
  return normal_form(Hinv * r, T);
}

bool provably_radical(const RegularChain& T) {
  if (T.is_empty()) return true;  // zero ideal of a polynomial ring
  if (T.size() != 1) return false;
  const MultiPoly& f = T.polys()[0];
  int v = f.main_var();
  if (!univar_in(f, v)) return false;
  const PrimeField& F = f.ctx()->field;
  DensePoly1 d = f.to_dense1(v);
  DensePoly1 g = dp_gcd(F, d, dp_derivative(F, d));
  return dp_deg(g) == 0;
}

}  // namespace tricube
