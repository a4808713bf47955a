#include "tricube/mpoly.hpp"

#include <algorithm>

#include "tricube/common.hpp"

namespace tricube {

CtxPtr make_ctx(uint64_t prime, std::vector<std::string> vars) {
  if (vars.empty()) throw precondition_error("context needs at least one variable");
  for (const auto& v : vars)
    if (v.empty()) throw precondition_error("empty variable name");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw precondition_error("duplicate variable name: " + vars[i]);
  return std::make_shared<PolyCtx>(PolyCtx{PrimeField(prime), std::move(vars)});
}

void check_same_ctx(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx() != b.ctx())
    throw internal_error("mixing polynomials from different contexts");
}

namespace {

void check_var(const CtxPtr& ctx, int v) {
  if (!ctx) throw internal_error("null polynomial context");
  if (v < 0 || static_cast<std::size_t>(v) >= ctx->vars.size())
    throw precondition_error("variable index out of range: " + std::to_string(v));
}

}  // namespace

MultiPoly MultiPoly::zero(CtxPtr ctx) { return constant(std::move(ctx), Fp{0}); }

MultiPoly MultiPoly::constant(CtxPtr ctx, Fp c) {
  MultiPoly r;
  r.ctx_ = std::move(ctx);
  r.var_ = -1;
  r.cval_ = c;
  return r;
}

MultiPoly MultiPoly::from_int(CtxPtr ctx, long long c) {
  Fp v = ctx->field.from_int(c);
  return constant(std::move(ctx), v);
}

MultiPoly MultiPoly::var(CtxPtr ctx, int v, int exp) {
  check_var(ctx, v);
  if (exp < 0) throw precondition_error("negative exponent");
  if (exp == 0) return from_int(std::move(ctx), 1);
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(exp) + 1, zero(ctx));
  coeffs.back() = from_int(ctx, 1);
  return make(std::move(ctx), v, std::move(coeffs));
}

MultiPoly MultiPoly::make(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return zero(std::move(ctx));
  if (coeffs.size() == 1) return std::move(coeffs[0]);
  MultiPoly r;
  r.ctx_ = std::move(ctx);
  r.var_ = v;
  r.coeffs_ = std::move(coeffs);
  return r;
}

MultiPoly MultiPoly::from_coeffs(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs) {
  check_var(ctx, v);
  for (const auto& c : coeffs) {
    if (c.is_null()) throw internal_error("null coefficient");
    if (c.main_var() >= v)
      throw precondition_error("coefficient involves the level variable or higher");
  }
  return make(std::move(ctx), v, std::move(coeffs));
}

Fp MultiPoly::constant_value() const {
  if (var_ >= 0) throw precondition_error("constant_value of a non-constant");
  return cval_;
}

int MultiPoly::mvar() const {
  if (var_ < 0) throw precondition_error("mvar of a constant");
  return var_;
}

int MultiPoly::degree(int v) const {
  if (var_ < 0) return cval_.v == 0 ? -1 : 0;
  if (v > var_) return 0;
  if (v == var_) return static_cast<int>(coeffs_.size()) - 1;
  int d = -1;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) d = std::max(d, c.degree(v));
  return d;
}

int MultiPoly::main_degree() const { return degree(mvar()); }

MultiPoly MultiPoly::initial() const {
  if (var_ < 0) throw precondition_error("initial of a constant");
  return coeffs_.back();
}

MultiPoly MultiPoly::reductum() const {
  if (var_ < 0) throw precondition_error("reductum of a constant");
  std::vector<MultiPoly> c(coeffs_.begin(), coeffs_.end() - 1);
  return make(ctx_, var_, std::move(c));
}

MultiPoly MultiPoly::coeff_in(int v, int k) const {
  if (k < 0) throw precondition_error("negative coefficient index");
  if (var_ < v || var_ < 0) return k == 0 ? *this : zero(ctx_);
  if (var_ == v)
    return static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)]
                                                        : zero(ctx_);
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.coeff_in(v, k));
  return make(ctx_, var_, std::move(out));
}

std::vector<MultiPoly> MultiPoly::to_univar(int v) const {
  int d = degree(v);
  std::vector<MultiPoly> out;
  for (int k = 0; k <= d; ++k) out.push_back(coeff_in(v, k));
  return out;
}

MultiPoly MultiPoly::from_univar(CtxPtr ctx, int v, std::vector<MultiPoly> coeffs) {
  check_var(ctx, v);
  bool below = true;
  for (const auto& c : coeffs) {
    if (c.is_null()) throw internal_error("null coefficient");
    if (c.main_var() >= v) below = false;
  }
  if (below) return make(std::move(ctx), v, std::move(coeffs));
  // Coefficients involve variables above v (a univariate view in a non-main
  // variable); rebuild through ring operations, which renormalize.
  MultiPoly xv = var(ctx, v);
  MultiPoly acc = zero(ctx);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * xv + coeffs[i];
  return acc;
}

int MultiPoly::total_degree() const {
  if (var_ < 0) return cval_.v == 0 ? -1 : 0;
  int d = -1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    d = std::max(d, static_cast<int>(k) + coeffs_[k].total_degree());
  }
  return d;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  check_same_ctx(a, b);
  if (a.var_ != b.var_) return false;
  if (a.var_ < 0) return a.cval_ == b.cval_;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  if (var_ < 0) return constant(ctx_, ctx_->field.neg(cval_));
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return make(ctx_, var_, std::move(out));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_ctx(*this, o);
  if (var_ < 0 && o.var_ < 0) return constant(ctx_, ctx_->field.add(cval_, o.cval_));
  if (var_ == o.var_) {
    std::vector<MultiPoly> out;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < coeffs_.size() && i < o.coeffs_.size())
        out.push_back(coeffs_[i] + o.coeffs_[i]);
      else if (i < coeffs_.size())
        out.push_back(coeffs_[i]);
      else
        out.push_back(o.coeffs_[i]);
    }
    return make(ctx_, var_, std::move(out));
  }
  if (var_ > o.var_) {
    std::vector<MultiPoly> out = coeffs_;
    out[0] = out[0] + o;
    return make(ctx_, var_, std::move(out));
  }
  return o + *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scale(Fp s) const {
  if (s.v == 0) return zero(ctx_);
  if (var_ < 0) return constant(ctx_, ctx_->field.mul(cval_, s));
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.scale(s));
  return make(ctx_, var_, std::move(out));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_ctx(*this, o);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  if (var_ < 0) return o.scale(cval_);
  if (o.var_ < 0) return scale(o.cval_);
  if (var_ == o.var_) {
    std::vector<MultiPoly> out(coeffs_.size() + o.coeffs_.size() - 1, zero(ctx_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
      }
    }
    return make(ctx_, var_, std::move(out));
  }
  if (var_ > o.var_) {
    std::vector<MultiPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * o);
    return make(ctx_, var_, std::move(out));
  }
  return o * *this;
}

MultiPoly MultiPoly::pow(uint64_t e) const {
  MultiPoly acc = from_int(ctx_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::subst(int v, Fp val) const {
  if (var_ < v || var_ < 0) return *this;
  if (var_ == v) {
    MultiPoly acc = zero(ctx_);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc.scale(val) + coeffs_[i];
    return acc;
  }
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.subst(v, val));
  return make(ctx_, var_, std::move(out));
}

MultiPoly MultiPoly::subst_shift(int v, Fp c) const {
  if (c.v == 0 || var_ < v || var_ < 0) return *this;
  if (var_ == v) {
    std::vector<MultiPoly> w = coeffs_;
    std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j)
        w[j - 1] = w[j - 1] + w[j].scale(c);
    return make(ctx_, var_, std::move(w));
  }
  std::vector<MultiPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& cc : coeffs_) out.push_back(cc.subst_shift(v, c));
  return make(ctx_, var_, std::move(out));
}

Fp MultiPoly::eval(const std::vector<Fp>& point) const {
  if (var_ < 0) return cval_;
  if (point.size() != ctx_->vars.size())
    throw precondition_error("evaluation point arity mismatch");
  Fp x = point[static_cast<std::size_t>(var_)];
  Fp acc{0};
  const PrimeField& F = ctx_->field;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = F.add(F.mul(acc, x), coeffs_[i].eval(point));
  return acc;
}

DensePoly1 MultiPoly::to_dense1(int v) const {
  DensePoly1 out;
  if (var_ < 0) {
    if (cval_.v != 0) out.c.push_back(cval_);
    return out;
  }
  if (var_ != v)
    throw precondition_error("polynomial is not univariate in the requested variable");
  out.c.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!c.is_constant())
      throw precondition_error("polynomial is not univariate in the requested variable");
    out.c.push_back(c.cval_);
  }
  return out;
}

MultiPoly MultiPoly::from_dense1(CtxPtr ctx, int v, const DensePoly1& d) {
  check_var(ctx, v);
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(d.c.size());
  for (Fp x : d.c) coeffs.push_back(constant(ctx, x));
  return make(std::move(ctx), v, std::move(coeffs));
}

std::string MultiPoly::canonical_bytes() const {
  std::string out;
  if (var_ < 0) {
    out.push_back('c');
    for (int i = 0; i < 8; ++i)
      out.push_back(static_cast<char>((cval_.v >> (8 * i)) & 0xff));
    return out;
  }
  out.push_back('v');
  out += std::to_string(var_);
  out.push_back(':');
  out += std::to_string(coeffs_.size());
  out.push_back('[');
  for (const auto& c : coeffs_) out += c.canonical_bytes();
  out.push_back(']');
  return out;
}

PremResult prem(const MultiPoly& A, const MultiPoly& B, int v) {
  check_same_ctx(A, B);
  if (B.is_zero()) throw precondition_error("pseudo-division by zero");
  const CtxPtr& ctx = A.ctx();
  int da = A.degree(v), db = B.degree(v);
  if (db < 1)
    throw precondition_error("invalid divisor: constant in the division variable");
  if (da < db || da < 0)
    return {A, MultiPoly::zero(ctx), 0};
  std::vector<MultiPoly> r = A.to_univar(v);
  std::vector<MultiPoly> b = B.to_univar(v);
  MultiPoly lb = b[static_cast<std::size_t>(db)];
  std::vector<MultiPoly> q(static_cast<std::size_t>(da - db) + 1, MultiPoly::zero(ctx));
  // Multiply by lc(B) exactly once per index step so the exponent is always
  // da - db + 1, independent of coefficient vanishing along the way.
  for (int k = da; k >= db; --k) {
    MultiPoly c = r[static_cast<std::size_t>(k)];
    for (auto& qq : q) qq = qq * lb;
    q[static_cast<std::size_t>(k - db)] = q[static_cast<std::size_t>(k - db)] + c;
    for (int i = 0; i < k; ++i) {
      MultiPoly t = r[static_cast<std::size_t>(i)] * lb;
      int bi = i - (k - db);
      if (bi >= 0) t = t - c * b[static_cast<std::size_t>(bi)];
      r[static_cast<std::size_t>(i)] = t;
    }
    r[static_cast<std::size_t>(k)] = MultiPoly::zero(ctx);
  }
  return {MultiPoly::from_univar(ctx, v, std::move(r)),
          MultiPoly::from_univar(ctx, v, std::move(q)), da - db + 1};
}

std::optional<MultiPoly> divide_exact(const MultiPoly& A, const MultiPoly& B) {
  check_same_ctx(A, B);
  if (B.is_zero()) throw precondition_error("division by zero");
  const CtxPtr& ctx = A.ctx();
  if (A.is_zero()) return MultiPoly::zero(ctx);
  if (B.is_constant()) return A.scale(ctx->field.inv(B.constant_value()));
  int v = B.mvar();
  if (A.main_var() < v) return std::nullopt;
  int db = B.degree(v);
  std::vector<MultiPoly> b = B.to_univar(v);
  const MultiPoly& lb = b[static_cast<std::size_t>(db)];
  std::vector<MultiPoly> r = A.to_univar(v);
  int da = static_cast<int>(r.size()) - 1;
  if (da < db) return std::nullopt;
  std::vector<MultiPoly> q(static_cast<std::size_t>(da - db) + 1, MultiPoly::zero(ctx));
  for (int k = da; k >= db; --k) {
    const MultiPoly& c = r[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::optional<MultiPoly> step = divide_exact(c, lb);
    if (!step) return std::nullopt;
    q[static_cast<std::size_t>(k - db)] = *step;
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(k - db + i);
      r[idx] = r[idx] - *step * b[static_cast<std::size_t>(i)];
    }
  }
  for (const auto& rest : r)
    if (!rest.is_zero()) return std::nullopt;
  return MultiPoly::from_univar(ctx, v, std::move(q));
}

}  // namespace tricube
