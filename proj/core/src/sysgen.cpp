#include "tricube/sysgen.hpp"

#include "tricube/common.hpp"

namespace tricube {

namespace {

Fp rand_fp(const PrimeField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> d(0, F.modulus() - 1);
  return Fp{d(rng)};
}

Fp rand_fp_nonzero(const PrimeField& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> d(1, F.modulus() - 1);
  return Fp{d(rng)};
}

// All monomials in x_0..x_v of total degree <= budget, uniform coefficients.
MultiPoly rand_tdeg(const CtxPtr& ctx, std::mt19937_64& rng, int v,
                    int budget) {
  if (v < 0) return MultiPoly::constant(ctx, rand_fp(ctx->field, rng));
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(static_cast<std::size_t>(budget) + 1);
  for (int k = 0; k <= budget; ++k)
    coeffs.push_back(rand_tdeg(ctx, rng, v - 1, budget - k));
  return MultiPoly::from_univar(ctx, v, std::move(coeffs));
}

// All monomials with exponent of x_w strictly below bounds[w] for w <= v.
MultiPoly rand_reduced(const CtxPtr& ctx, std::mt19937_64& rng, int v,
                       const std::vector<int>& bounds) {
  if (v < 0) return MultiPoly::constant(ctx, rand_fp(ctx->field, rng));
  std::vector<MultiPoly> coeffs;
  for (int k = 0; k < bounds[static_cast<std::size_t>(v)]; ++k)
    coeffs.push_back(rand_reduced(ctx, rng, v - 1, bounds));
  return MultiPoly::from_univar(ctx, v, std::move(coeffs));
}

MultiPoly line(const CtxPtr& ctx, Fp slope, Fp icept) {
  MultiPoly x = MultiPoly::var(ctx, 0);
  MultiPoly y = MultiPoly::var(ctx, 1);
  return y - x.scale(slope) - MultiPoly::constant(ctx, icept);
}

}  // namespace

MultiPoly random_dense(const CtxPtr& ctx, std::mt19937_64& rng, int d) {
  if (d < 0) throw precondition_error("negative total degree");
  int top = static_cast<int>(ctx->vars.size()) - 1;
  for (;;) {
    MultiPoly f = rand_tdeg(ctx, rng, top, d);
    if (f.total_degree() == d) return f;
  }
}

std::pair<MultiPoly, MultiPoly> random_dense_system(const CtxPtr& ctx,
                                                    uint64_t seed, int d) {
  if (d < 1) throw precondition_error("total degree must be positive");
  std::mt19937_64 rng(seed);
  int top = static_cast<int>(ctx->vars.size()) - 1;
  auto draw = [&] {
    for (;;) {
      MultiPoly f = random_dense(ctx, rng, d);
      if (f.mvar() == top) return f;
    }
  };
  MultiPoly P = draw();
  MultiPoly Q = draw();
  return {P, Q};
}

std::pair<MultiPoly, MultiPoly> non_equiprojectable_system(const CtxPtr& ctx,
                                                           uint64_t seed,
                                                           int blocks) {
  const PrimeField& F = ctx->field;
  if (ctx->vars.size() != 2)
    throw precondition_error("non_equiprojectable_system needs 2 variables");
  if (blocks < 2) throw precondition_error("need at least 2 factors");
  if (F.modulus() < 5) throw precondition_error("prime too small");
  std::mt19937_64 rng(seed);

  std::size_t b = static_cast<std::size_t>(blocks);
  std::vector<Fp> c(b), d(b), e(b), f(b);
  for (std::size_t i = 0; i < b; ++i) {
    c[i] = rand_fp(F, rng);
    d[i] = rand_fp(F, rng);
  }
  Fp a = rand_fp(F, rng);
  // Distinct heights of the first two P-lines over x = a.
  while (F.add(F.mul(c[1], a), d[1]) == F.add(F.mul(c[0], a), d[0]))
    d[1] = rand_fp(F, rng);
  // Q-lines 0 and 1 cross their P partners exactly at x = a.
  for (std::size_t i = 0; i < 2; ++i) {
    Fp t = rand_fp_nonzero(F, rng);
    e[i] = F.add(c[i], t);
    f[i] = F.sub(d[i], F.mul(t, a));
  }
  for (std::size_t i = 2; i < b; ++i) {
    do {
      e[i] = rand_fp(F, rng);
      f[i] = rand_fp(F, rng);
    } while ([&] {
      for (std::size_t j = 0; j < b; ++j)
        if (e[i] == c[j] && f[i] == d[j]) return true;
      return false;
    }());
  }

  MultiPoly P = MultiPoly::from_int(ctx, 1);
  MultiPoly Q = MultiPoly::from_int(ctx, 1);
  for (std::size_t i = 0; i < b; ++i) {
    P = P * line(ctx, c[i], d[i]);
    Q = Q * line(ctx, e[i], f[i]);
  }
  return {P, Q};
}

RegularChain random_monic_tower(const CtxPtr& ctx, std::mt19937_64& rng,
                                const std::vector<int>& degs) {
  if (degs.size() != ctx->vars.size())
    throw precondition_error("one degree per context variable");
  std::vector<MultiPoly> polys;
  std::vector<int> bounds;
  for (int v = 0; v < static_cast<int>(degs.size()); ++v) {
    int dv = degs[static_cast<std::size_t>(v)];
    if (dv < 1) throw precondition_error("tower degrees must be positive");
    std::vector<MultiPoly> coeffs;
    for (int k = 0; k < dv; ++k)
      coeffs.push_back(rand_reduced(ctx, rng, v - 1, bounds));
    coeffs.push_back(MultiPoly::from_int(ctx, 1));
    polys.push_back(MultiPoly::from_univar(ctx, v, std::move(coeffs)));
    bounds.push_back(dv);
  }
  return RegularChain::make(ctx, std::move(polys));
}

}  // namespace tricube
