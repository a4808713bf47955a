#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tricube/densepoly.hpp"
#include "tricube/field.hpp"
#include "tricube/mpoly.hpp"
#include "tricube/regops.hpp"
#include "tricube/scube.hpp"
#include "tricube/solver.hpp"
#include "tricube/sysgen.hpp"

namespace {

using namespace tricube;

// 119 * 2^23 + 1, 2-adicity 23: every transform length the benches use fits.
constexpr uint64_t kPrime = 998244353;

void BM_Ntt(benchmark::State& state) {
  PrimeField F(kPrime);
  int logn = static_cast<int>(state.range(0));
  std::size_t n = std::size_t{1} << logn;
  Fp root = F.root_of_unity(logn);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint64_t> d(0, kPrime - 1);
  std::vector<Fp> base(n);
  for (auto& x : base) x = Fp{d(rng)};
  for (auto _ : state) {
    std::vector<Fp> data = base;
    ntt_transform(F, data, root, false);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}
BENCHMARK(BM_Ntt)->Arg(12)->Arg(16)->Arg(20);

void BM_ScubeResultant(benchmark::State& state) {
  CtxPtr ctx = make_ctx(kPrime, {"x1", "x2"});
  int d = static_cast<int>(state.range(0));
  auto [P, Q] = random_dense_system(ctx, 42, d);
  for (auto _ : state) {
    Scube s = Scube::build(P, Q, 1, {});
    benchmark::DoNotOptimize(&s.resultant());
  }
}
BENCHMARK(BM_ScubeResultant)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_SolveDense(benchmark::State& state) {
  CtxPtr ctx = make_ctx(kPrime, {"x1", "x2"});
  int d = static_cast<int>(state.range(0));
  auto [P, Q] = random_dense_system(ctx, 42, d);
  for (auto _ : state) {
    Decomposition dec = solve_two_eqs(P, Q);
    benchmark::DoNotOptimize(dec.chains.data());
  }
}
BENCHMARK(BM_SolveDense)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RegularizeTower(benchmark::State& state) {
  CtxPtr ctx = make_ctx(101, {"x1", "x2", "x3"});
  std::mt19937_64 rng(5);
  RegularChain T = random_monic_tower(ctx, rng, {4, 4, 4});
  MultiPoly P = random_dense(ctx, rng, 3);
  for (auto _ : state) {
    RegOps eng;
    SplitResult out = eng.regularize(P, T);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_RegularizeTower)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
