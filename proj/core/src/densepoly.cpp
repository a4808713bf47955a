#include "tricube/densepoly.hpp"

#include <algorithm>

#include "tricube/common.hpp"

namespace tricube {

namespace {
// Below this size schoolbook multiplication beats the transform.
constexpr std::size_t kNttCrossover = 64;
}  // namespace

void dp_trim(DensePoly1& a) {
  while (!a.c.empty() && a.c.back().v == 0) a.c.pop_back();
}

DensePoly1 dp_from_u64(const PrimeField& F, const std::vector<uint64_t>& coeffs) {
  DensePoly1 r;
  r.c.reserve(coeffs.size());
  for (uint64_t x : coeffs) r.c.push_back(F.from_uint(x));
  dp_trim(r);
  return r;
}

bool dp_eq(const DensePoly1& a, const DensePoly1& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

DensePoly1 dp_add(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  DensePoly1 r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Fp{0});
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.add(r.c[i], b.c[i]);
  dp_trim(r);
  return r;
}

DensePoly1 dp_sub(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  DensePoly1 r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Fp{0});
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
  dp_trim(r);
  return r;
}

DensePoly1 dp_neg(const PrimeField& F, const DensePoly1& a) {
  DensePoly1 r = a;
  for (Fp& x : r.c) x = F.neg(x);
  return r;
}

DensePoly1 dp_scale(const PrimeField& F, const DensePoly1& a, Fp s) {
  if (s.v == 0) return {};
  DensePoly1 r = a;
  for (Fp& x : r.c) x = F.mul(x, s);
  return r;
}

DensePoly1 dp_shift_pow(const DensePoly1& a, int k) {
  if (dp_is_zero(a) || k == 0) return a;
  DensePoly1 r;
  r.c.assign(static_cast<std::size_t>(k), Fp{0});
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

void ntt_transform(const PrimeField& F, std::vector<Fp>& data, Fp root,
                   bool inverse) {
  std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw precondition_error("transform size must be a power of two");
  if (n == 1) return;
  // The root must have exact order n, otherwise the transform is not
  // invertible and interpolation would silently corrupt results.
  if (F.pow(root, n).v != 1 || F.pow(root, n / 2).v == 1)
    throw precondition_error("transform root does not have exact order " +
                             std::to_string(n));
  Fp w = inverse ? F.inv(root) : root;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    Fp wl = F.pow(w, n / len);
    for (std::size_t i = 0; i < n; i += len) {
      Fp wk = F.one();
      for (std::size_t k = 0; k < len / 2; ++k) {
        Fp u = data[i + k];
        Fp t = F.mul(data[i + k + len / 2], wk);
        data[i + k] = F.add(u, t);
        data[i + k + len / 2] = F.sub(u, t);
        wk = F.mul(wk, wl);
      }
    }
  }
  if (inverse) {
    Fp ninv = F.inv(F.from_uint(n));
    for (Fp& x : data) x = F.mul(x, ninv);
  }
}

namespace {

DensePoly1 mul_school(const PrimeField& F, const DensePoly1& a,
                      const DensePoly1& b) {
  DensePoly1 r;
  r.c.assign(a.c.size() + b.c.size() - 1, Fp{0});
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  dp_trim(r);
  return r;
}

}  // namespace

DensePoly1 dp_mul(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  if (dp_is_zero(a) || dp_is_zero(b)) return {};
  std::size_t need = a.c.size() + b.c.size() - 1;
  if (std::min(a.c.size(), b.c.size()) < kNttCrossover)
    return mul_school(F, a, b);
  std::size_t n = 1;
  int k = 0;
  while (n < need) {
    n <<= 1;
    ++k;
  }
  if (k > F.two_adicity()) return mul_school(F, a, b);
  std::vector<Fp> fa(n, Fp{0}), fb(n, Fp{0});
  std::copy(a.c.begin(), a.c.end(), fa.begin());
  std::copy(b.c.begin(), b.c.end(), fb.begin());
  Fp root = F.root_of_unity(k);
  ntt_transform(F, fa, root, false);
  ntt_transform(F, fb, root, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = F.mul(fa[i], fb[i]);
  ntt_transform(F, fa, root, true);
  DensePoly1 r;
  r.c.assign(fa.begin(), fa.begin() + static_cast<std::ptrdiff_t>(need));
  dp_trim(r);
  return r;
}

std::pair<DensePoly1, DensePoly1> dp_divrem(const PrimeField& F,
                                            const DensePoly1& a,
                                            const DensePoly1& b) {
  if (dp_is_zero(b)) throw precondition_error("division by zero polynomial");
  int da = dp_deg(a), db = dp_deg(b);
  if (da < db) return {DensePoly1{}, a};
  Fp linv = F.inv(dp_lc(b));
  DensePoly1 rem = a;
  DensePoly1 quo;
  quo.c.assign(static_cast<std::size_t>(da - db + 1), Fp{0});
  for (int i = da; i >= db; --i) {
    Fp cf = rem.c[static_cast<std::size_t>(i)];
    if (cf.v == 0) continue;
    Fp q = F.mul(cf, linv);
    quo.c[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      std::size_t idx = static_cast<std::size_t>(i - db + j);
      rem.c[idx] = F.sub(rem.c[idx], F.mul(q, b.c[static_cast<std::size_t>(j)]));
    }
  }
  rem.c.resize(static_cast<std::size_t>(db > 0 ? db : 0));
  dp_trim(rem);
  dp_trim(quo);
  return {quo, rem};
}

DensePoly1 dp_rem(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  return dp_divrem(F, a, b).second;
}

DensePoly1 dp_div_exact(const PrimeField& F, const DensePoly1& a,
                        const DensePoly1& b) {
  auto [q, r] = dp_divrem(F, a, b);
  if (!dp_is_zero(r)) throw internal_error("inexact polynomial division");
  return q;
}

DensePoly1 dp_gcd(const PrimeField& F, DensePoly1 a, DensePoly1 b) {
  while (!dp_is_zero(b)) {
    DensePoly1 r = dp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (dp_is_zero(a)) return a;
  return dp_scale(F, a, F.inv(dp_lc(a)));
}

XgcdResult dp_xgcd(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  DensePoly1 r0 = a, r1 = b;
  DensePoly1 u0 = dp_from_u64(F, {1}), u1;
  DensePoly1 v0, v1 = dp_from_u64(F, {1});
  while (!dp_is_zero(r1)) {
    auto [q, r] = dp_divrem(F, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    DensePoly1 nu = dp_sub(F, u0, dp_mul(F, q, u1));
    u0 = std::move(u1);
    u1 = std::move(nu);
    DensePoly1 nv = dp_sub(F, v0, dp_mul(F, q, v1));
    v0 = std::move(v1);
    v1 = std::move(nv);
  }
  if (dp_is_zero(r0)) return {r0, u0, v0};
  Fp s = F.inv(dp_lc(r0));
  return {dp_scale(F, r0, s), dp_scale(F, u0, s), dp_scale(F, v0, s)};
}

DensePoly1 dp_derivative(const PrimeField& F, const DensePoly1& a) {
  DensePoly1 r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = F.mul(a.c[i], F.from_uint(i));
  dp_trim(r);
  return r;
}

Fp dp_eval(const PrimeField& F, const DensePoly1& a, Fp x) {
  Fp acc{0};
  for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

DensePoly1 dp_taylor_shift(const PrimeField& F, const DensePoly1& a, Fp c) {
  if (c.v == 0 || dp_is_zero(a)) return a;
  // Repeated synthetic division by (x - (-c)): quadratic, fine for the sizes
  // shifted here (shifts happen on inputs, not on transform-length data).
  DensePoly1 r = a;
  std::size_t n = r.c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j)
      r.c[j - 1] = F.add(r.c[j - 1], F.mul(r.c[j], c));
  }
  dp_trim(r);
  return r;
}

DensePoly1 dp_newton_interp(const PrimeField& F, const std::vector<Fp>& xs,
                            const std::vector<Fp>& ys) {
  if (xs.size() != ys.size()) throw precondition_error("interpolation arity mismatch");
  std::size_t n = xs.size();
  if (n == 0) return {};
  // Divided differences in place.
  std::vector<Fp> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Fp denom = F.sub(xs[i], xs[i - level]);
      if (denom.v == 0) throw precondition_error("repeated interpolation node");
      dd[i] = F.mul(F.sub(dd[i], dd[i - 1]), F.inv(denom));
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form.
  DensePoly1 r;
  for (std::size_t i = n; i-- > 0;) {
    // r = r * (x - xs[i]) + dd[i]
    DensePoly1 shifted = dp_shift_pow(r, 1);
    DensePoly1 scaled = dp_scale(F, r, F.neg(xs[i]));
    r = dp_add(F, shifted, scaled);
    r = dp_add(F, r, DensePoly1{{dd[i]}});
    dp_trim(r);
  }
  return r;
}

namespace {

// For f with only exponents divisible by p, returns g with g(x^p) = f(x).
// Over the prime field the coefficients carry over unchanged.
DensePoly1 dp_pth_root(const PrimeField& F, const DensePoly1& f) {
  uint64_t p = F.modulus();
  DensePoly1 r;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i].v == 0) continue;
    if (i % p != 0) throw internal_error("pth root of a polynomial with stray exponents");
    std::size_t k = i / p;
    if (r.c.size() <= k) r.c.resize(k + 1, Fp{0});
    r.c[k] = f.c[i];
  }
  dp_trim(r);
  return r;
}

void dp_squarefree_rec(const PrimeField& F, DensePoly1 f, uint64_t mult,
                       std::vector<SquarefreePart>& out) {
  if (dp_deg(f) <= 0) return;
  DensePoly1 fp = dp_derivative(F, f);
  if (dp_is_zero(fp)) {
    dp_squarefree_rec(F, dp_pth_root(F, f), mult * F.modulus(), out);
    return;
  }
  DensePoly1 g = dp_gcd(F, f, fp);
  DensePoly1 w = dp_div_exact(F, f, g);
  w = dp_scale(F, w, F.inv(dp_lc(w)));
  uint64_t i = 1;
  while (dp_deg(w) > 0) {
    DensePoly1 y = dp_gcd(F, w, g);
    DensePoly1 fac = dp_div_exact(F, w, y);
    if (dp_deg(fac) > 0)
      out.push_back({dp_scale(F, fac, F.inv(dp_lc(fac))), mult * i});
    g = dp_div_exact(F, g, y);
    w = std::move(y);
    ++i;
  }
  // Whatever is left of g has all exponents divisible by p.
  if (dp_deg(g) > 0) dp_squarefree_rec(F, dp_pth_root(F, g), mult * F.modulus(), out);
}

}  // namespace

std::vector<SquarefreePart> dp_squarefree(const PrimeField& F, const DensePoly1& a) {
  if (dp_is_zero(a)) throw precondition_error("squarefree decomposition of zero");
  std::vector<SquarefreePart> out;
  DensePoly1 f = dp_scale(F, a, F.inv(dp_lc(a)));
  dp_squarefree_rec(F, std::move(f), 1, out);
  return out;
}

DensePoly1 dp_prem(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  if (dp_is_zero(b)) throw precondition_error("pseudo-division by zero");
  int da = dp_deg(a), db = dp_deg(b);
  if (da < db) return a;
  // Over a field the remainder is unique, so scaling first is exact.
  Fp m = F.pow(dp_lc(b), static_cast<uint64_t>(da - db + 1));
  return dp_rem(F, dp_scale(F, a, m), b);
}

Fp dp_resultant(const PrimeField& F, const DensePoly1& a, const DensePoly1& b) {
  int da = dp_deg(a), db = dp_deg(b);
  if (da < 0 && db < 0) return F.one();
  if (da < 0) return db > 0 ? Fp{0} : F.one();
  if (db < 0) return da > 0 ? Fp{0} : F.one();
  if (da == 0) return F.pow(a.c[0], static_cast<uint64_t>(db));
  if (db == 0) return F.pow(b.c[0], static_cast<uint64_t>(da));
  if (da < db) {
    Fp r = dp_resultant(F, b, a);
    return ((static_cast<uint64_t>(da) * static_cast<uint64_t>(db)) & 1) ? F.neg(r) : r;
  }
  SubresChainFp ch = dp_subres_chain(F, a, b);
  return dp_is_zero(ch.s[0]) ? Fp{0} : ch.s[0].c[0];
}

SubresChainFp dp_subres_chain(const PrimeField& F, const DensePoly1& P,
                              const DensePoly1& Q) {
  int p = dp_deg(P), q = dp_deg(Q);
  if (q < 1 || p < q)
    throw precondition_error("chain needs deg P >= deg Q >= 1");
  SubresChainFp out;
  out.s.assign(static_cast<std::size_t>(q) + 1, DensePoly1{});

  // Top element: lc(Q)^(p-q-1) * Q. Its leading coefficient is then
  // lc(Q)^(p-q), the principal coefficient of index q.
  Fp gamma = p > q ? F.pow(dp_lc(Q), static_cast<uint64_t>(p - q - 1))
                   : F.inv(dp_lc(Q));
  out.s[static_cast<std::size_t>(q)] = dp_scale(F, Q, gamma);

  // Walk down the chain. A holds the most recent nondefective element S_d
  // (degree d, leading coefficient the principal coefficient s_d); B holds
  // the next chain element S_{d-1}, which may be defective.
  DensePoly1 A = out.s[static_cast<std::size_t>(q)];
  int d = q;
  DensePoly1 B = dp_prem(F, P, dp_neg(F, Q));
  while (true) {
    if (dp_is_zero(B)) break;
    int e = dp_deg(B);
    out.s[static_cast<std::size_t>(d - 1)] = B;
    DensePoly1 next_A;
    if (e == d - 1) {
      next_A = B;
    } else {
      // Defective: indices e < j < d-1 stay zero and the nondefective S_e is
      // a scalar multiple of S_{d-1}.
      Fp f = F.pow(F.mul(dp_lc(B), F.inv(dp_lc(A))),
                   static_cast<uint64_t>(d - 1 - e));
      out.s[static_cast<std::size_t>(e)] = dp_scale(F, B, f);
      next_A = out.s[static_cast<std::size_t>(e)];
    }
    if (e == 0) break;
    Fp divisor = F.pow(F.inv(dp_lc(A)), static_cast<uint64_t>(d - e + 1));
    DensePoly1 next_B = dp_scale(F, dp_prem(F, A, dp_neg(F, B)), divisor);
    A = std::move(next_A);
    d = e;
    B = std::move(next_B);
  }
  return out;
}

}  // namespace tricube
