#include "tricube/subres.hpp"

#include <utility>

#include "tricube/common.hpp"
#include "tricube/densepoly.hpp"

namespace tricube {

namespace {

MultiPoly lc_in(const MultiPoly& f, int v) {
  return f.coeff_in(v, f.degree(v));
}

MultiPoly exact(std::optional<MultiPoly> r, const char* where) {
  if (!r) throw internal_error(std::string("inexact chain division in ") + where);
  return std::move(*r);
}

}  // namespace

MultiPoly dpol_subres(const MultiPoly& P, const MultiPoly& Q, int v, int d) {
  check_same_ctx(P, Q);
  const CtxPtr& ctx = P.ctx();
  int p = P.degree(v), q = Q.degree(v);
  if (!(0 <= d && d < q && q <= p))
    throw precondition_error("determinantal oracle needs 0 <= d < q <= p");
  int m = p + q - 2 * d;
  if (m > 24)
    throw precondition_error("determinantal oracle capped at dimension 24");
  int width = p + q - d;

  // Row polynomials v^(q-d-1)P ... P, v^(p-d-1)Q ... Q; column c holds the
  // coefficient of v^(width-1-c).
  std::vector<std::vector<MultiPoly>> M;
  M.reserve(static_cast<std::size_t>(m));
  for (int i = q - d - 1; i >= 0; --i) {
    MultiPoly rp = MultiPoly::var(ctx, v, static_cast<uint64_t>(i)) * P;
    std::vector<MultiPoly> row;
    row.reserve(static_cast<std::size_t>(width));
    for (int c = 0; c < width; ++c) row.push_back(rp.coeff_in(v, width - 1 - c));
    M.push_back(std::move(row));
  }
  for (int i = p - d - 1; i >= 0; --i) {
    MultiPoly rq = MultiPoly::var(ctx, v, static_cast<uint64_t>(i)) * Q;
    std::vector<MultiPoly> row;
    row.reserve(static_cast<std::size_t>(width));
    for (int c = 0; c < width; ++c) row.push_back(rq.coeff_in(v, width - 1 - c));
    M.push_back(std::move(row));
  }

  // One fraction-free elimination pass over the shared first m-1 columns.
  // Afterwards the last row holds, in column c, the determinant of the block
  // (first m-1 columns | column c); row swaps flip every determinant's sign
  // uniformly. An empty pivot column means those columns are dependent, so
  // every bordered determinant vanishes.
  MultiPoly denom = MultiPoly::from_int(ctx, 1);
  bool negate = false;
  for (int k = 0; k + 1 < m; ++k) {
    int pivot = -1;
    for (int r = k; r < m; ++r)
      if (!M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]
               .is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return MultiPoly::zero(ctx);
    if (pivot != k) {
      std::swap(M[static_cast<std::size_t>(pivot)],
                M[static_cast<std::size_t>(k)]);
      negate = !negate;
    }
    const auto& rk = M[static_cast<std::size_t>(k)];
    for (int i = k + 1; i < m; ++i) {
      auto& ri = M[static_cast<std::size_t>(i)];
      for (int j = k + 1; j < width; ++j) {
        MultiPoly num = rk[static_cast<std::size_t>(k)] *
                            ri[static_cast<std::size_t>(j)] -
                        ri[static_cast<std::size_t>(k)] *
                            rk[static_cast<std::size_t>(j)];
        ri[static_cast<std::size_t>(j)] =
            exact(divide_exact(num, denom), "determinantal oracle");
      }
      ri[static_cast<std::size_t>(k)] = MultiPoly::zero(ctx);
    }
    denom = rk[static_cast<std::size_t>(k)];
  }

  MultiPoly out = MultiPoly::zero(ctx);
  const auto& last = M[static_cast<std::size_t>(m - 1)];
  for (int k = 0; k <= d; ++k) {
    MultiPoly c = last[static_cast<std::size_t>(width - 1 - k)];
    if (negate) c = -c;
    if (k > 0) c = c * MultiPoly::var(ctx, v, static_cast<uint64_t>(k));
    out = out + c;
  }
  return out;
}

SubresChainM subres_chain_m(const MultiPoly& P, const MultiPoly& Q, int v) {
  check_same_ctx(P, Q);
  const CtxPtr& ctx = P.ctx();
  int p = P.degree(v), q = Q.degree(v);
  if (q < 1 || p < q)
    throw precondition_error("chain needs deg(P,v) >= deg(Q,v) >= 1");

  SubresChainM out;
  out.p = p;
  out.q = q;
  out.var = v;
  out.s.assign(static_cast<std::size_t>(q), MultiPoly::zero(ctx));
  MultiPoly lq = lc_in(Q, v);
  out.sq = lq.pow(static_cast<uint64_t>(p - q));
  out.top_scaled = p > q;
  out.top = out.top_scaled ? lq.pow(static_cast<uint64_t>(p - q - 1)) * Q : Q;

  // First descent, phrased against Q itself so the loop never needs the
  // formal top element: S_{e-1} = prem(Q, -S_{q-1}) / lc(Q)^((p-q)(q-e)+1).
  MultiPoly B = prem(P, -Q, v).rem;
  if (B.is_zero()) return out;
  int e = B.degree(v);
  out.s[static_cast<std::size_t>(q - 1)] = B;
  MultiPoly A = B;
  if (e < q - 1) {
    if (p > q) {
      MultiPoly num = lc_in(B, v).pow(static_cast<uint64_t>(q - 1 - e)) * B;
      out.s[static_cast<std::size_t>(e)] = exact(
          divide_exact(num, out.sq.pow(static_cast<uint64_t>(q - 1 - e))),
          "defective repair");
    } else {
      out.s[static_cast<std::size_t>(e)] =
          lc_in(B, v).pow(static_cast<uint64_t>(q - 1 - e)) * B;
    }
    A = out.s[static_cast<std::size_t>(e)];
  }
  if (e == 0) return out;
  uint64_t exp = static_cast<uint64_t>(p - q) * static_cast<uint64_t>(q - e) + 1;
  MultiPoly next = exact(divide_exact(prem(Q, -B, v).rem, lq.pow(exp)),
                         "first descent");
  int d = e;
  B = std::move(next);

  // Generic walk: A is the latest nondefective element S_d, B the next
  // chain element S_{d-1} (possibly defective of degree e < d-1).
  while (!B.is_zero()) {
    e = B.degree(v);
    out.s[static_cast<std::size_t>(d - 1)] = B;
    MultiPoly nextA = B;
    if (e < d - 1) {
      MultiPoly num = lc_in(B, v).pow(static_cast<uint64_t>(d - 1 - e)) * B;
      out.s[static_cast<std::size_t>(e)] =
          exact(divide_exact(
                    num, lc_in(A, v).pow(static_cast<uint64_t>(d - 1 - e))),
                "defective repair");
      nextA = out.s[static_cast<std::size_t>(e)];
    }
    if (e == 0) break;
    MultiPoly nextB = exact(
        divide_exact(prem(A, -B, v).rem,
                     lc_in(A, v).pow(static_cast<uint64_t>(d - e + 1))),
        "chain descent");
    A = std::move(nextA);
    d = e;
    B = std::move(nextB);
  }
  return out;
}

MultiPoly resultant(const MultiPoly& P, const MultiPoly& Q, int v) {
  check_same_ctx(P, Q);
  const CtxPtr& ctx = P.ctx();
  int da = P.degree(v), db = Q.degree(v);
  if (da < 0 && db < 0) return MultiPoly::from_int(ctx, 1);
  if (da < 0) return db > 0 ? MultiPoly::zero(ctx) : MultiPoly::from_int(ctx, 1);
  if (db < 0) return da > 0 ? MultiPoly::zero(ctx) : MultiPoly::from_int(ctx, 1);
  if (da == 0) return P.pow(static_cast<uint64_t>(db));
  if (db == 0) return Q.pow(static_cast<uint64_t>(da));
  if (da < db) {
    MultiPoly r = resultant(Q, P, v);
    return ((static_cast<uint64_t>(da) * static_cast<uint64_t>(db)) & 1)
               ? -r
               : r;
  }
  return subres_chain_m(P, Q, v).s[0];
}

std::vector<bool> specialize_check(const MultiPoly& P, const MultiPoly& Q,
                                   int v, const std::vector<Fp>& assignment) {
  check_same_ctx(P, Q);
  const CtxPtr& ctx = P.ctx();
  const PrimeField& F = ctx->field;
  if (assignment.size() != ctx->vars.size())
    throw precondition_error("assignment must cover every variable");
  int p = P.degree(v), q = Q.degree(v);
  if (q < 1 || p < q)
    throw precondition_error("chain needs deg(P,v) >= deg(Q,v) >= 1");

  auto specialize = [&](const MultiPoly& f) {
    MultiPoly r = f;
    for (int i = 0; i < static_cast<int>(ctx->vars.size()); ++i)
      if (i != v) r = r.subst(i, assignment[static_cast<std::size_t>(i)]);
    return r;
  };

  MultiPoly Ps = specialize(P), Qs = specialize(Q);
  if (Ps.degree(v) != p || Qs.degree(v) != q)
    throw precondition_error(
        "assignment kills a leading coefficient; specialization does not "
        "commute there");

  SubresChainFp ground = dp_subres_chain(F, Ps.to_dense1(v), Qs.to_dense1(v));
  SubresChainM lifted = subres_chain_m(P, Q, v);
  std::vector<bool> report(static_cast<std::size_t>(q), false);
  for (int j = 0; j < q; ++j) {
    MultiPoly image = specialize(lifted.s[static_cast<std::size_t>(j)]);
    DensePoly1 got = image.is_zero() ? DensePoly1{} : image.to_dense1(v);
    report[static_cast<std::size_t>(j)] =
        dp_eq(got, ground.s[static_cast<std::size_t>(j)]);
  }
  return report;
}

}  // namespace tricube
