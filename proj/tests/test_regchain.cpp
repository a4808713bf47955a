#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "tricube/common.hpp"
#include "tricube/regchain.hpp"
#include "tricube/subres.hpp"

using namespace tricube;

namespace {

MultiPoly random_mpoly(const CtxPtr& ctx, std::mt19937_64& rng, int nvars,
                       int maxdeg) {
  MultiPoly acc = MultiPoly::zero(ctx);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  std::function<void(int)> walk = [&](int v) {
    if (v == nvars) {
      MultiPoly term = MultiPoly::from_int(
          ctx, static_cast<int64_t>(rng() % ctx->field.modulus()));
      for (int i = 0; i < nvars; ++i)
        if (e[static_cast<std::size_t>(i)] > 0)
          term = term *
                 MultiPoly::var(ctx, i,
                                static_cast<uint64_t>(
                                    e[static_cast<std::size_t>(i)]));
      acc = acc + term;
      return;
    }
    for (e[static_cast<std::size_t>(v)] = 0;
         e[static_cast<std::size_t>(v)] <= maxdeg;
         ++e[static_cast<std::size_t>(v)])
      walk(v + 1);
  };
  walk(0);
  return acc;
}

// Monic tower: entry i is x_i^deg[i] + (random polynomial of lower main
// degree in x_0..x_i). Monic initials make any such tower a regular chain.
RegularChain random_tower(const CtxPtr& ctx, std::mt19937_64& rng,
                          const std::vector<int>& degs) {
  std::vector<MultiPoly> polys;
  for (int v = 0; v < static_cast<int>(degs.size()); ++v) {
    MultiPoly tail =
        random_mpoly(ctx, rng, v + 1, degs[static_cast<std::size_t>(v)] - 1);
    polys.push_back(
        MultiPoly::var(ctx, v,
                       static_cast<uint64_t>(degs[static_cast<std::size_t>(v)])) +
        tail);
  }
  return RegularChain::make(ctx, std::move(polys));
}

// F_p-rational points of V(T) for a zero-dimensional chain, by enumeration.
std::vector<std::vector<Fp>> rational_points(const RegularChain& T) {
  const CtxPtr& ctx = T.ctx();
  uint64_t p = ctx->field.modulus();
  std::size_t n = ctx->vars.size();
  std::vector<std::vector<Fp>> out;
  std::vector<Fp> point(n, Fp{0});
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == n) {
      for (const MultiPoly& t : T.polys())
        if (t.eval(point).v != 0) return;
      out.push_back(point);
      return;
    }
    for (uint64_t a = 0; a < p; ++a) {
      point[v] = Fp{a};
      walk(v + 1);
    }
  };
  walk(0);
  return out;
}

}  // namespace

TEST_CASE("chain construction, flags, and slicing") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2", "x3"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  MultiPoly x3 = MultiPoly::var(ctx, 2);
  MultiPoly t1 = x1.pow(2) - MultiPoly::from_int(ctx, 2);
  MultiPoly t2 = x2.pow(2) - x1;

  RegularChain T = RegularChain::make(ctx, {t2, t1});  // any input order
  CHECK(T.size() == 2);
  CHECK(T.polys()[0] == t1);  // sorted ascending by main variable
  CHECK(T.polys()[1] == t2);
  CHECK(T.has_var(0));
  CHECK(T.has_var(1));
  CHECK(!T.has_var(2));
  CHECK(T.poly_at(1) == t2);
  CHECK(T.main_degree(0) == 2);
  CHECK(T.mvars() == std::vector<int>{0, 1});
  CHECK(!T.zero_dimensional());  // x3 is free
  CHECK(T.normalized());
  CHECK(T.check_initials_regular());

  RegularChain low = T.below(1);
  CHECK(low.size() == 1);
  CHECK(low.polys()[0] == t1);
  CHECK(T.above(0).polys() == std::vector<MultiPoly>{t2});
  CHECK(T.above(1).is_empty());

  RegularChain full = T.extend(x3.pow(3) - x2);
  CHECK(full.zero_dimensional());
  CHECK_THROWS_AS(full.extend(x3 - x1), precondition_error);

  // Constant initials are rescaled monic on construction.
  RegularChain scaled = RegularChain::make(
      ctx, {(x1.pow(2) - MultiPoly::from_int(ctx, 2)).scale(Fp{2})});
  CHECK(scaled.polys()[0] == t1);
  CHECK(scaled.normalized());

  // Non-constant initial: stored as-is, chain not normalized.
  RegularChain rough = RegularChain::make(ctx, {t1, x1 * x2.pow(2) + x1});
  CHECK(!rough.normalized());

  CHECK_THROWS_AS(RegularChain::make(ctx, {MultiPoly::from_int(ctx, 3)}),
                  precondition_error);
  CHECK_THROWS_AS(RegularChain::make(ctx, {t1, x1 + MultiPoly::from_int(ctx, 1)}),
                  precondition_error);
  CHECK(RegularChain::empty(ctx).is_empty());
}

TEST_CASE("pseudo-remainder chain and the membership test") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  RegularChain T = RegularChain::make(
      ctx, {x1.pow(2) - MultiPoly::from_int(ctx, 2), x2.pow(2) - x1});

  CHECK(is_null_mod_sat(T.polys()[1], T));  // a chain entry reduces to zero
  CHECK(is_null_mod_sat(x2.pow(4) - MultiPoly::from_int(ctx, 2), T));
  CHECK(!is_null_mod_sat(MultiPoly::from_int(ctx, 1), T));
  CHECK(!is_null_mod_sat(x2 + x1, T));
  CHECK(prem_chain(x2.pow(4) - MultiPoly::from_int(ctx, 2), T).is_zero());
}

TEST_CASE("iterated resultant decides regularity in dimension zero") {
  CtxPtr c7 = make_ctx(7, {"x1"});
  MultiPoly y = MultiPoly::var(c7, 0);
  RegularChain T7 =
      RegularChain::make(c7, {y.pow(2) - MultiPoly::from_int(c7, 2)});
  CHECK(iter_res(y, T7) == MultiPoly::from_int(c7, 5));
  CHECK(is_regular_resultant_test(y, T7));
  CHECK(is_regular_resultant_test(MultiPoly::from_int(c7, 1), T7));

  CtxPtr c5 = make_ctx(5, {"x1"});
  MultiPoly z = MultiPoly::var(c5, 0);
  RegularChain T5 =
      RegularChain::make(c5, {z.pow(2) - MultiPoly::from_int(c5, 1)});
  CHECK(!is_regular_resultant_test(z - MultiPoly::from_int(c5, 1), T5));

  // A free variable in the tested polynomial or inside a chain entry leaves
  // the residue ring non-artinian; the test refuses rather than guesses.
  CtxPtr cfree = make_ctx(5, {"x1", "x2"});
  MultiPoly w1 = MultiPoly::var(cfree, 0);
  MultiPoly w2 = MultiPoly::var(cfree, 1);
  RegularChain Tfree =
      RegularChain::make(cfree, {w1.pow(2) - MultiPoly::from_int(cfree, 1)});
  CHECK(is_regular_resultant_test(w1, Tfree));  // x2 occurs nowhere
  CHECK_THROWS_AS(is_regular_resultant_test(w2, Tfree), unsupported_error);
  RegularChain Tmixed = RegularChain::make(cfree, {w2.pow(2) - w1});
  CHECK_THROWS_AS(is_regular_resultant_test(w2, Tmixed), unsupported_error);
}

TEST_CASE("normal form: frozen values and structure") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  RegularChain T = RegularChain::make(
      ctx, {x1.pow(2) - MultiPoly::from_int(ctx, 2), x2.pow(2) - x1});

  CHECK(normal_form(x2.pow(4), T) == MultiPoly::from_int(ctx, 2));
  CHECK(normal_form(MultiPoly::from_int(ctx, 5), T) ==
        MultiPoly::from_int(ctx, 5));
  CHECK(normal_form(T.polys()[1], T).is_zero());
  CHECK(normal_form(T.polys()[0], T).is_zero());

  // Degrees drop strictly below the chain degrees.
  std::mt19937_64 rng(411);
  for (int i = 0; i < 30; ++i) {
    MultiPoly P = random_mpoly(ctx, rng, 2, 5);
    MultiPoly r = normal_form(P, T);
    CHECK(r.degree(0) < 2);
    CHECK(r.degree(1) < 2);
    CHECK(normal_form(r, T) == r);  // idempotent
  }

  // The chain below the main variable reduces coefficients of a free one.
  CtxPtr c3 = make_ctx(7, {"x1", "x2", "x3"});
  MultiPoly u1 = MultiPoly::var(c3, 0);
  MultiPoly u3 = MultiPoly::var(c3, 2);
  RegularChain Tlow =
      RegularChain::make(c3, {u1.pow(2) - MultiPoly::from_int(c3, 2)});
  MultiPoly P = u1.pow(3) * u3 + u1;
  CHECK(normal_form(P, Tlow) ==
        u1.scale(Fp{2}) * u3 + u1);  // x1^3 = 2*x1 mod x1^2-2

  RegularChain rough = RegularChain::make(c3, {u1 * MultiPoly::var(c3, 1) + u1});
  CHECK_THROWS_AS(normal_form(u1, rough), precondition_error);
}

TEST_CASE("normal form is linear and multiplicative up to reduction") {
  CtxPtr ctx = make_ctx(13, {"x1", "x2"});
  std::mt19937_64 rng(902);
  RegularChain T = random_tower(ctx, rng, {3, 2});
  for (int i = 0; i < 25; ++i) {
    MultiPoly P = random_mpoly(ctx, rng, 2, 4);
    MultiPoly Q = random_mpoly(ctx, rng, 2, 4);
    CHECK(normal_form(P + Q, T) == normal_form(P, T) + normal_form(Q, T));
    CHECK(normal_form(P * Q, T) ==
          normal_form(normal_form(P, T) * normal_form(Q, T), T));
  }
}

TEST_CASE("membership vs vanishing on rational points") {
  // Chains assembled from split squarefree univariates: the ideal is radical
  // with fully rational zero set, so membership and vanishing coincide.
  CtxPtr ctx = make_ctx(5, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  MultiPoly t1 = (x1 - MultiPoly::from_int(ctx, 1)) * (x1 - MultiPoly::from_int(ctx, 2));
  MultiPoly t2 = (x2 - MultiPoly::from_int(ctx, 3)) * (x2 - MultiPoly::from_int(ctx, 4));
  RegularChain T = RegularChain::make(ctx, {t1, t2});
  std::vector<std::vector<Fp>> pts = rational_points(T);
  REQUIRE(pts.size() == 4);

  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    MultiPoly P = random_mpoly(ctx, rng, 2, 3);
    bool vanishes = true;
    for (const auto& pt : pts)
      if (P.eval(pt).v != 0) vanishes = false;
    CHECK(is_null_mod_sat(P, T) == vanishes);
  }
  // And on a non-split chain, membership still forces vanishing.
  CtxPtr c7 = make_ctx(7, {"x1", "x2"});
  RegularChain Tmix = RegularChain::make(
      c7, {MultiPoly::var(c7, 0).pow(2) - MultiPoly::from_int(c7, 2),
           MultiPoly::var(c7, 1).pow(2) - MultiPoly::var(c7, 0)});
  std::vector<std::vector<Fp>> pts7 = rational_points(Tmix);
  for (int i = 0; i < 40; ++i) {
    MultiPoly P = random_mpoly(c7, rng, 2, 4);
    if (is_null_mod_sat(P, Tmix))
      for (const auto& pt : pts7) CHECK(P.eval(pt).v == 0);
  }
}

TEST_CASE("tower inverse: frozen values") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  RegularChain T =
      RegularChain::make(ctx, {x1.pow(2) - MultiPoly::from_int(ctx, 2)});
  // x1^{-1} = 4*x1 since 4*x1*x1 = 4*2 = 1 mod 7.
  CHECK(inverse_mod(x1, T) == x1.scale(Fp{4}));
  CHECK(inverse_mod(MultiPoly::from_int(ctx, 3), T) ==
        MultiPoly::from_int(ctx, 5));

  CtxPtr c5 = make_ctx(5, {"x1"});
  MultiPoly z = MultiPoly::var(c5, 0);
  RegularChain T5 =
      RegularChain::make(c5, {z.pow(2) - MultiPoly::from_int(c5, 1)});
  CHECK_THROWS_AS(inverse_mod(z - MultiPoly::from_int(c5, 1), T5),
                  not_invertible_error);
  try {
    inverse_mod(z - MultiPoly::from_int(c5, 1), T5);
  } catch (const not_invertible_error& e) {
    // The witness must be a genuine zero-divisor: nonzero modulo the chain,
    // iterated resultant zero.
    CHECK(!normal_form(e.witness, T5).is_zero());
    CHECK(iter_res(e.witness, T5).is_zero());
  }
}

TEST_CASE("tower inverse agrees with the resultant criterion") {
  std::mt19937_64 rng(5150);
  struct Shape {
    uint64_t p;
    std::vector<std::string> vars;
    std::vector<int> degs;
  };
  std::vector<Shape> shapes = {
      {7, {"x1"}, {4}},
      {5, {"x1", "x2"}, {2, 2}},
      {13, {"x1", "x2"}, {3, 2}},
      {101, {"x1", "x2", "x3"}, {2, 2, 2}},
  };
  for (const Shape& sh : shapes) {
    CtxPtr ctx = make_ctx(sh.p, sh.vars);
    for (int rep = 0; rep < 15; ++rep) {
      RegularChain T = random_tower(ctx, rng, sh.degs);
      MultiPoly P = random_mpoly(ctx, rng, static_cast<int>(sh.vars.size()), 2);
      MultiPoly r = normal_form(P, T);
      if (r.is_zero()) continue;
      bool regular = is_regular_resultant_test(P, T);
      try {
        MultiPoly inv = inverse_mod(P, T);
        CHECK(regular);  // success certifies a unit
        CHECK(normal_form(inv * P - MultiPoly::from_int(ctx, 1), T).is_zero());
      } catch (const not_invertible_error& e) {
        // A unit can still land here when an intermediate pivot is a
        // zero-divisor; what must hold is that the witness is genuine.
        CHECK(!normal_form(e.witness, T).is_zero());
        CHECK(iter_res(e.witness, T).is_zero());
      }
      if (!regular)  // a non-unit must never be inverted
        CHECK_THROWS_AS(inverse_mod(P, T), not_invertible_error);
    }
  }
}

TEST_CASE("normalize: frozen values and the multiply-back identity") {
  CtxPtr c7 = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(c7, 0);
  MultiPoly x2 = MultiPoly::var(c7, 1);
  RegularChain T =
      RegularChain::make(c7, {x1.pow(2) - MultiPoly::from_int(c7, 2)});
  CHECK(normalize(x1 * x2 + MultiPoly::from_int(c7, 1), T) ==
        x2 + x1.scale(Fp{4}));

  CtxPtr c5 = make_ctx(5, {"x1", "x2"});
  MultiPoly y1 = MultiPoly::var(c5, 0);
  MultiPoly y2 = MultiPoly::var(c5, 1);
  RegularChain T5 =
      RegularChain::make(c5, {y1.pow(2) - MultiPoly::from_int(c5, 1)});
  CHECK(normalize(y1 * y2, T5) == y2);

  // Constant initial: normalize is plain scaling after reduction.
  MultiPoly P = x2.pow(2).scale(Fp{3}) + x1;
  CHECK(normalize(P, T) == x2.pow(2) + x1.scale(Fp{5}));  // 3^{-1} = 5 mod 7

  // Multiply-back: NF(H * normalize(P, T) - P, T) = 0, result monic.
  std::mt19937_64 rng(31337);
  CtxPtr c13 = make_ctx(13, {"x1", "x2", "x3"});
  RegularChain tower = random_tower(c13, rng, {3, 2});
  int made = 0;
  for (int attempt = 0; attempt < 500 && made < 20; ++attempt) {
    MultiPoly H = random_mpoly(c13, rng, 2, 2);
    if (normal_form(H, tower).is_zero() ||
        !is_regular_resultant_test(H, tower.below(2)))
      continue;
    MultiPoly tail = random_mpoly(c13, rng, 2, 2);
    MultiPoly cand = H * MultiPoly::var(c13, 2, 2) + tail;
    MultiPoly g;
    try {
      g = normalize(cand, tower);
    } catch (const not_invertible_error& e) {
      // Inversion may demand a split on a zero-divisor pivot even for a
      // regular initial; only the witness quality is checkable here.
      CHECK(!normal_form(e.witness, tower).is_zero());
      CHECK(iter_res(e.witness, tower).is_zero());
      continue;
    }
    CHECK(g.degree(2) == 2);
    CHECK(g.initial() == MultiPoly::from_int(c13, 1));
    CHECK(normal_form(H * g - cand, tower).is_zero());
    ++made;
  }
  CHECK(made >= 5);

  CHECK(normalize(MultiPoly::from_int(c7, 4), T) ==
        MultiPoly::from_int(c7, 1));
}

TEST_CASE("radicality certificate stays conservative") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  CHECK(provably_radical(RegularChain::make(
      ctx, {x1.pow(2) - MultiPoly::from_int(ctx, 2)})));
  CHECK(!provably_radical(RegularChain::make(ctx, {x1.pow(2)})));
  CHECK(!provably_radical(RegularChain::make(
      ctx, {x1.pow(2) - x1.scale(Fp{2}) + MultiPoly::from_int(ctx, 1)})));
  CHECK(!provably_radical(RegularChain::make(
      ctx, {x1.pow(2) - MultiPoly::from_int(ctx, 2), x2.pow(2) - x1})));
  CHECK(!provably_radical(RegularChain::make(ctx, {x2.pow(2) - x1})));
  // The zero ideal of a polynomial ring is radical.
  CHECK(provably_radical(RegularChain::empty(ctx)));
}
