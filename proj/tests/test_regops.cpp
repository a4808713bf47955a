#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tricube/densepoly.hpp"
#include "tricube/mpoly.hpp"
#include "tricube/regchain.hpp"
#include "tricube/regops.hpp"

using namespace tricube;

namespace {

MultiPoly random_mpoly(const CtxPtr& ctx, std::mt19937_64& rng, int nvars,
                       int maxdeg) {
  std::uniform_int_distribution<uint64_t> coef(0, ctx->field.modulus() - 1);
  std::vector<int> exps(nvars, 0);
  MultiPoly acc = MultiPoly::zero(ctx);
  for (;;) {
    MultiPoly term = MultiPoly::from_int(ctx, static_cast<long long>(coef(rng)));
    for (int v = 0; v < nvars; ++v)
      if (exps[v] > 0) term = term * MultiPoly::var(ctx, v, exps[v]);
    acc = acc + term;
    int v = 0;
    while (v < nvars && exps[v] == maxdeg) exps[v++] = 0;
    if (v == nvars) break;
    ++exps[v];
  }
  return acc;
}

RegularChain random_tower(const CtxPtr& ctx, std::mt19937_64& rng,
                          const std::vector<int>& degs) {
  std::vector<MultiPoly> polys;
  for (int v = 0; v < static_cast<int>(degs.size()); ++v) {
    MultiPoly t = MultiPoly::var(ctx, v, degs[v]);
    if (degs[v] > 1) t = t + random_mpoly(ctx, rng, v + 1, degs[v] - 1);
    else t = t + random_mpoly(ctx, rng, v, 0);
    polys.push_back(t);
  }
  return RegularChain::make(ctx, polys);
}

std::vector<std::vector<Fp>> rational_points(const RegularChain& T) {
  const CtxPtr& ctx = T.ctx();
  uint64_t p = ctx->field.modulus();
  int n = static_cast<int>(ctx->vars.size());
  std::vector<std::vector<Fp>> out;
  std::vector<uint64_t> idx(n, 0);
  for (;;) {
    std::vector<Fp> pt(n);
    for (int v = 0; v < n; ++v) pt[v] = Fp{idx[v]};
    bool on = true;
    for (const MultiPoly& t : T.polys())
      if (t.eval(pt).v != 0) { on = false; break; }
    if (on) out.push_back(pt);
    int v = 0;
    while (v < n && idx[v] == p - 1) idx[v++] = 0;
    if (v == n) break;
    ++idx[v];
  }
  return out;
}

std::vector<std::vector<uint64_t>> point_set(const std::vector<std::vector<Fp>>& pts) {
  std::vector<std::vector<uint64_t>> out;
  for (const auto& pt : pts) {
    std::vector<uint64_t> row;
    for (Fp a : pt) row.push_back(a.v);
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool chains_match(const RegularChain& A, const std::vector<MultiPoly>& polys) {
  if (A.size() != polys.size()) return false;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (!(A.polys()[i] == polys[i])) return false;
  return true;
}

long long degree_product(const RegularChain& T) {
  long long d = 1;
  for (const MultiPoly& t : T.polys()) d *= t.main_degree();
  return d;
}

std::string canon(const SplitResult& s) {
  std::string b;
  for (const auto& br : s) {
    b += br.tag == RegTag::null ? 'N' : 'R';
    for (const MultiPoly& t : br.chain.polys()) {
      b += t.canonical_bytes();
      b += '|';
    }
    b += ';';
  }
  return b;
}

std::string canon(const RegularGcdSequence& s) {
  std::string b;
  for (const auto& pr : s) {
    b += pr.g.canonical_bytes();
    b += '!';
    for (const MultiPoly& t : pr.chain.polys()) {
      b += t.canonical_bytes();
      b += '|';
    }
    b += ';';
  }
  return b;
}

// The contract for one emitted gcd pair: the gcd is a nonzero reduced element;
// when it has positive degree in y its initial is regular modulo the branch
// and it pseudo-divides both inputs to zero modulo the saturated ideal.
void check_gcd_pair(const MultiPoly& P, const MultiPoly& Q, int y,
                    const MultiPoly& g, const RegularChain& E) {
  REQUIRE(!g.is_zero());
  if (g.is_constant() || g.mvar() != y) {
    if (!E.is_empty()) CHECK(!normal_form(g, E).is_zero());
    return;
  }
  MultiPoly h = g.initial();
  if (h.is_constant() || E.is_empty()) CHECK(!h.is_zero());
  else CHECK(is_regular_resultant_test(h, E));
  CHECK(is_null_mod_sat(prem(P, g, y).rem, E));
  CHECK(is_null_mod_sat(prem(Q, g, y).rem, E));
}

MultiPoly random_monic_in(const CtxPtr& ctx, std::mt19937_64& rng, int y,
                          int dy, int dx) {
  std::vector<MultiPoly> coeffs(dy + 1, MultiPoly::zero(ctx));
  for (int k = 0; k < dy; ++k) coeffs[k] = random_mpoly(ctx, rng, 1, dx);
  coeffs[dy] = MultiPoly::from_int(ctx, 1);
  return MultiPoly::from_univar(ctx, y, coeffs);
}

DensePoly1 monic1(const PrimeField& F, DensePoly1 a) {
  if (dp_is_zero(a)) return a;
  return dp_scale(F, a, F.inv(dp_lc(a)));
}

}  // namespace

TEST_CASE("regularize splits against a shared algebraic factor") {
  CtxPtr ctx = make_ctx(5, {"x1"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOps eng;

  SplitResult out = eng.regularize(x1 - one, T);
  REQUIRE(out.size() == 2);
  CHECK(out[0].tag == RegTag::null);
  CHECK(chains_match(out[0].chain, {x1 - one}));
  CHECK(out[1].tag == RegTag::regular);
  CHECK(chains_match(out[1].chain, {x1 + one}));

  out = eng.regularize(x1, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::regular);
  CHECK(chains_match(out[0].chain, T.polys()));

  out = eng.regularize(one, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::regular);

  out = eng.regularize(MultiPoly::zero(ctx), T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::null);

  out = eng.regularize(x1 * x1 - one, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::null);
}

TEST_CASE("regularize propagates a bottom split through a tower") {
  CtxPtr ctx = make_ctx(7, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one, x2 * x2 - x1});
  RegOps eng;

  // x2^2 - 1 reduces to x1 - 1: null exactly above the x1 = 1 point.
  SplitResult out = eng.regularize(x2 * x2 - one, T);
  REQUIRE(out.size() == 2);
  CHECK(out[0].tag == RegTag::null);
  CHECK(chains_match(out[0].chain, {x1 - one, x2 * x2 - x1}));
  CHECK(out[1].tag == RegTag::regular);
  CHECK(chains_match(out[1].chain, {x1 + one, x2 * x2 - x1}));

  // x2 - 1 splits at the top level and refines the bottom as a side effect.
  out = eng.regularize(x2 - one, T);
  REQUIRE(out.size() == 3);
  long long total = 0;
  bool saw_null = false;
  for (const auto& br : out) {
    total += degree_product(br.chain);
    if (br.tag == RegTag::null) {
      saw_null = true;
      CHECK(chains_match(br.chain, {x1 - one, x2 - one}));
    }
  }
  CHECK(saw_null);
  CHECK(total == degree_product(T));

  auto pts = point_set(rational_points(T));
  std::vector<std::vector<uint64_t>> covered;
  for (const auto& br : out)
    for (auto& row : point_set(rational_points(br.chain)))
      covered.push_back(row);
  std::sort(covered.begin(), covered.end());
  CHECK(covered == pts);
}

TEST_CASE("regularize handles polynomials with free variables") {
  CtxPtr ctx = make_ctx(5, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOps eng;

  SplitResult out = eng.regularize((x1 - one) * x2, T);
  REQUIRE(out.size() == 2);
  CHECK(out[0].tag == RegTag::null);
  CHECK(chains_match(out[0].chain, {x1 - one}));
  CHECK(out[1].tag == RegTag::regular);
  CHECK(chains_match(out[1].chain, {x1 + one}));

  out = eng.regularize(x2, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::regular);
  CHECK(chains_match(out[0].chain, T.polys()));

  out = eng.regularize((x1 * x1 - one) * x2, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::null);

  // Top coefficient dies on one branch but a lower one survives there, so
  // both sides come back regular despite the split.
  MultiPoly P = (x1 - one) * x2 * x2 + (x1 + one) * x2;
  out = eng.regularize(P, T);
  REQUIRE(out.size() == 2);
  CHECK(out[0].tag == RegTag::regular);
  CHECK(chains_match(out[0].chain, {x1 - one}));
  CHECK(out[1].tag == RegTag::regular);
  CHECK(chains_match(out[1].chain, {x1 + one}));
}

TEST_CASE("regularize answers without splitting outside the zero-dimensional scope") {
  CtxPtr ctx = make_ctx(5, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x2 * x2 - x1 * x1});
  RegOps eng;

  SplitResult out = eng.regularize(x2 * x2 - x1 * x1, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::null);

  out = eng.regularize(x2, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].tag == RegTag::regular);

  CHECK_THROWS_AS(eng.regularize(x2 - x1, T), unsupported_error);
}

TEST_CASE("regularize_initial peels vanishing leading coefficients") {
  CtxPtr ctx = make_ctx(5, {"x1", "x2"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly x2 = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  MultiPoly three = MultiPoly::from_int(ctx, 3);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOps eng;

  auto out = eng.regularize_initial((x1 - one) * x2 + three, T);
  REQUIRE(out.size() == 2);
  CHECK(out[0].poly == three);
  CHECK(chains_match(out[0].chain, {x1 - one}));
  CHECK(out[1].poly == three * x2 + three);
  CHECK(chains_match(out[1].chain, {x1 + one}));

  out = eng.regularize_initial(x1 * x2 + one, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].poly == x1 * x2 + one);
  CHECK(chains_match(out[0].chain, T.polys()));

  out = eng.regularize_initial(x2 * x2 + x1 * x2 + three, T);
  REQUIRE(out.size() == 1);
  CHECK(out[0].poly == x2 * x2 + x1 * x2 + three);

  RegularChain loose = RegularChain::make(ctx, {x1 * x2 + one});
  CHECK_THROWS_AS(eng.regularize_initial(x2, loose), precondition_error);
  RegularChain open = RegularChain::make(ctx, {x2 * x2 - x1});
  CHECK_THROWS_AS(eng.regularize_initial(x2, open), precondition_error);
}

TEST_CASE("regular_gcd agrees with hand-computed splits") {
  SUBCASE("equal inputs come back verbatim") {
    CtxPtr ctx = make_ctx(7, {"x1", "y"});
    MultiPoly x1 = MultiPoly::var(ctx, 0);
    MultiPoly y = MultiPoly::var(ctx, 1);
    MultiPoly one = MultiPoly::from_int(ctx, 1);
    MultiPoly two = MultiPoly::from_int(ctx, 2);
    RegularChain T = RegularChain::make(ctx, {x1 * x1 - two});
    MultiPoly P = y * y + x1 * y + one;
    RegOps eng;
    RegularGcdSequence out = eng.regular_gcd(P, P, T);
    REQUIRE(out.size() == 1);
    CHECK(out[0].g == P);
    CHECK(chains_match(out[0].chain, T.polys()));
  }

  SUBCASE("linear pair splits into a common root and a coprime branch") {
    CtxPtr ctx = make_ctx(5, {"x1", "y"});
    MultiPoly x1 = MultiPoly::var(ctx, 0);
    MultiPoly y = MultiPoly::var(ctx, 1);
    MultiPoly one = MultiPoly::from_int(ctx, 1);
    RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
    RegOps eng;
    RegularGcdSequence out = eng.regular_gcd(y - x1, y - one, T);
    REQUIRE(out.size() == 2);
    CHECK(out[0].g == y - one);
    CHECK(chains_match(out[0].chain, {x1 - one}));
    CHECK(out[1].g.is_constant());
    CHECK(!out[1].g.is_zero());
    CHECK(chains_match(out[1].chain, {x1 + one}));
  }

  SUBCASE("quadratics sharing one root factor it out everywhere") {
    CtxPtr ctx = make_ctx(7, {"x1", "y"});
    MultiPoly x1 = MultiPoly::var(ctx, 0);
    MultiPoly y = MultiPoly::var(ctx, 1);
    MultiPoly one = MultiPoly::from_int(ctx, 1);
    RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
    MultiPoly P = y * y + (one - x1) * y - x1;
    MultiPoly Q = y * y - (one + x1) * y + x1;
    RegOps eng;
    RegularGcdSequence out = eng.regular_gcd(P, Q, T);
    REQUIRE(out.size() == 1);
    CHECK(out[0].g == y - x1);
    CHECK(chains_match(out[0].chain, T.polys()));
    check_gcd_pair(P, Q, 1, out[0].g, out[0].chain);
  }

  SUBCASE("nilpotent base: defective rows are cleared and multiplicity splits") {
    CtxPtr ctx = make_ctx(7, {"x1", "y"});
    MultiPoly x1 = MultiPoly::var(ctx, 0);
    MultiPoly y = MultiPoly::var(ctx, 1);
    RegularChain T = RegularChain::make(ctx, {x1 * x1});
    MultiPoly P = y * y - x1;
    MultiPoly Q = y * y + x1;
    RegOps eng;
    RegularGcdSequence out = eng.regular_gcd(P, Q, T);
    REQUIRE(out.size() == 2);
    for (const auto& pr : out) {
      CHECK(pr.g == y * y);
      CHECK(chains_match(pr.chain, {x1}));
      check_gcd_pair(P, Q, 1, pr.g, pr.chain);
    }
  }
}

TEST_CASE("regular_gcd validates its inputs") {
  CtxPtr ctx = make_ctx(5, {"x1", "y"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly y = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOps eng;

  CHECK_THROWS_AS(eng.regular_gcd(one, y - one, T), precondition_error);
  CHECK_THROWS_AS(eng.regular_gcd(y - one, x1 - one, T), precondition_error);
  RegularChain top = RegularChain::make(ctx, {y * y - one});
  CHECK_THROWS_AS(eng.regular_gcd(y - one, y + one, top), precondition_error);
  // Initial that is a zero divisor modulo the chain.
  CHECK_THROWS_AS(eng.regular_gcd((x1 - one) * y + one, y - one, T),
                  precondition_error);

  CtxPtr ctx3 = make_ctx(5, {"x1", "x2", "y"});
  MultiPoly a = MultiPoly::var(ctx3, 0);
  MultiPoly b = MultiPoly::var(ctx3, 1);
  MultiPoly z = MultiPoly::var(ctx3, 2);
  RegularChain open = RegularChain::make(ctx3, {b * b - a * a});
  CHECK_THROWS_AS(eng.regular_gcd(z - a, z - b, open), precondition_error);
}

TEST_CASE("regular_gcd accepts a caller-supplied subresultant provider") {
  CtxPtr ctx = make_ctx(5, {"x1", "y"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly y = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOps eng;

  auto prov = make_provider(y - x1, y - one, 1);
  RegularGcdSequence ref = eng.regular_gcd(y - x1, y - one, T);
  RegularGcdSequence out = eng.regular_gcd(y - x1, y - one, T, *prov);
  CHECK(canon(out) == canon(ref));

  MultiPoly P2 = y * y - x1;
  auto wrong = make_provider(P2, y - one, 1);
  CHECK_THROWS_AS(eng.regular_gcd(y - x1, y - one, T, *wrong),
                  precondition_error);
}

TEST_CASE("gcd recording captures every emitted pair") {
  CtxPtr ctx = make_ctx(5, {"x1", "y"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly y = MultiPoly::var(ctx, 1);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});

  RegOps eng;
  RegularGcdSequence out = eng.regular_gcd(y - x1, y - one, T);
  CHECK(eng.gcd_log().empty());

  eng.set_recording(true);
  out = eng.regular_gcd(y - x1, y - one, T);
  // Inner recursive emissions are recorded too, so the log is a superset.
  REQUIRE(eng.gcd_log().size() >= out.size());
  for (const auto& pr : out) {
    bool found = false;
    for (const GcdRecord& rec : eng.gcd_log())
      if (rec.g == pr.g && chains_match(rec.chain, pr.chain.polys()))
        found = true;
    CHECK(found);
  }
  for (const GcdRecord& rec : eng.gcd_log())
    check_gcd_pair(rec.p, rec.q, rec.y, rec.g, rec.chain);
  eng.clear_gcd_log();
  CHECK(eng.gcd_log().empty());
}

TEST_CASE("the branch budget stops runaway splitting") {
  CtxPtr ctx = make_ctx(5, {"x1"});
  MultiPoly x1 = MultiPoly::var(ctx, 0);
  MultiPoly one = MultiPoly::from_int(ctx, 1);
  RegularChain T = RegularChain::make(ctx, {x1 * x1 - one});
  RegOpts opts;
  opts.branch_cap = 2;
  RegOps eng(opts);
  CHECK_THROWS_AS(eng.regularize(x1 - one, T), unsupported_error);
}

TEST_CASE("regularize branches carry matching certificates on random input") {
  struct Shape {
    uint64_t p;
    std::vector<int> degs;
    int trials;
    bool points;
  };
  const Shape shapes[] = {
      {5, {4}, 10, true},       {13, {3}, 10, true},
      {5, {2, 2}, 8, true},     {13, {2, 3}, 8, true},
      {101, {3, 2}, 6, false},  {13, {2, 2, 2}, 5, false},
  };
  std::mt19937_64 rng(20260817);

  for (const Shape& sh : shapes) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < sh.degs.size(); ++v)
      names.push_back("x" + std::to_string(v + 1));
    CtxPtr ctx = make_ctx(sh.p, names);
    for (int trial = 0; trial < sh.trials; ++trial) {
      RegularChain T = random_tower(ctx, rng, sh.degs);
      MultiPoly P = random_mpoly(ctx, rng, static_cast<int>(sh.degs.size()), 2);
      RegOps eng;
      SplitResult out = eng.regularize(P, T);
      REQUIRE(!out.empty());

      long long total = 0;
      for (const auto& br : out) {
        REQUIRE(br.chain.size() == T.size());
        for (std::size_t i = 0; i < T.size(); ++i)
          CHECK(br.chain.polys()[i].mvar() == T.polys()[i].mvar());
        total += degree_product(br.chain);
        bool null_cert = is_null_mod_sat(P, br.chain);
        bool reg_cert = !iter_res(P, br.chain).is_zero();
        if (br.tag == RegTag::null) {
          CHECK(null_cert);
          CHECK(!reg_cert);
        } else {
          CHECK(reg_cert);
          CHECK(!null_cert);
        }
      }
      CHECK(total == degree_product(T));

      RegOps eng2;
      CHECK(canon(eng2.regularize(P, T)) == canon(out));
      CHECK(canon(eng.regularize(P, T)) == canon(out));

      if (sh.points) {
        auto pts = point_set(rational_points(T));
        std::vector<std::vector<uint64_t>> covered;
        for (const auto& br : out) {
          for (const auto& pt : rational_points(br.chain)) {
            bool vanishes = P.eval(pt).v == 0;
            CHECK(vanishes == (br.tag == RegTag::null));
            std::vector<uint64_t> row;
            for (Fp a : pt) row.push_back(a.v);
            covered.push_back(std::move(row));
          }
        }
        std::sort(covered.begin(), covered.end());
        covered.erase(std::unique(covered.begin(), covered.end()),
                      covered.end());
        CHECK(covered == pts);
      }
    }
  }
}

TEST_CASE("regular_gcd matches pointwise univariate gcds on random input") {
  std::mt19937_64 rng(777);
  for (uint64_t p : {7ull, 13ull}) {
    CtxPtr ctx = make_ctx(p, {"x1", "y"});
    MultiPoly x1 = MultiPoly::var(ctx, 0);
    for (int trial = 0; trial < 12; ++trial) {
      std::uniform_int_distribution<int> ddist(1, 4);
      std::uniform_int_distribution<int> tdist(2, 4);
      std::uniform_int_distribution<uint64_t> cdist(0, p - 1);

      // Every third trial forces a repeated root into the base so the
      // squarefree shortcut cannot fire.
      MultiPoly t = MultiPoly::zero(ctx);
      if (trial % 3 == 0) {
        MultiPoly lin = x1 - MultiPoly::from_int(ctx, static_cast<long long>(cdist(rng)));
        t = lin * lin;
        if (trial % 2 == 0)
          t = t * (x1 - MultiPoly::from_int(ctx, static_cast<long long>(cdist(rng))));
      } else {
        int d = tdist(rng);
        t = MultiPoly::var(ctx, 0, d) + random_mpoly(ctx, rng, 1, d - 1);
      }
      RegularChain T = RegularChain::make(ctx, {t});

      int dp = ddist(rng), dq = ddist(rng);
      MultiPoly P = random_monic_in(ctx, rng, 1, dp, 2);
      MultiPoly Q = random_monic_in(ctx, rng, 1, dq, 2);

      RegOps eng;
      eng.set_recording(true);
      RegularGcdSequence out = eng.regular_gcd(P, Q, T);
      REQUIRE(!out.empty());

      for (const auto& pr : out) check_gcd_pair(P, Q, 1, pr.g, pr.chain);
      for (const auto& rec : eng.gcd_log())
        check_gcd_pair(rec.p, rec.q, rec.y, rec.g, rec.chain);

      // The emitted chains repartition the base variety.
      auto pts = point_set(rational_points(T));
      std::vector<std::vector<uint64_t>> covered;
      for (const auto& pr : out)
        for (auto& row : point_set(rational_points(pr.chain)))
          covered.push_back(row);
      std::sort(covered.begin(), covered.end());
      covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
      CHECK(covered == pts);

      // At each root of a branch the gcd specializes to the monic gcd of the
      // specialized inputs (the inputs are monic in y, so degrees hold).
      const PrimeField& F = ctx->field;
      for (const auto& pr : out) {
        for (const auto& pt : rational_points(pr.chain)) {
          Fp a = pt[0];
          DensePoly1 pa = P.subst(0, a).to_dense1(1);
          DensePoly1 qa = Q.subst(0, a).to_dense1(1);
          DensePoly1 expect = dp_gcd(F, pa, qa);
          DensePoly1 got = monic1(F, pr.g.subst(0, a).to_dense1(1));
          if (pr.g.is_constant() || pr.g.mvar() != 1) {
            CHECK(dp_deg(expect) == 0);
          } else {
            REQUIRE(!dp_is_zero(got));
            CHECK(got.c == expect.c);
          }
        }
      }
    }
  }
}
