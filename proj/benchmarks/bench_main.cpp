#include <benchmark/benchmark.h>

#include "ftc/coloring.hpp"
#include "ftc/khalimsky.hpp"
#include "ftc/witness.hpp"

using namespace ftc;

static void BM_Core(benchmark::State& state) {
  auto x = product(khalimsky_interval(0, state.range(0)).space, khalimsky_circle(3).space);
  for (auto _ : state) benchmark::DoNotOptimize(core(x).core->size());
}
BENCHMARK(BM_Core)->Arg(4)->Arg(8)->Arg(16);

static void BM_Degree(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<long> table(2 * static_cast<std::size_t>(m));
  for (int z = 0; z < 2 * m; ++z) table[static_cast<std::size_t>(z)] = z % 4;
  auto f = make_circle_map(m, 2, table);
  for (auto _ : state) benchmark::DoNotOptimize(degree(f));
}
BENCHMARK(BM_Degree)->Arg(8)->Arg(64)->Arg(512);

static void BM_ClassifyHomComponents(benchmark::State& state) {
  auto x = khalimsky_circle(static_cast<int>(state.range(0))).space;
  auto y = khalimsky_circle(2).space;
  for (auto _ : state) benchmark::DoNotOptimize(hom_components(x, y, 1000000).maps.size());
}
BENCHMARK(BM_ClassifyHomComponents)->Arg(2)->Arg(3)->Arg(4);

static void BM_TcExact(benchmark::State& state) {
  auto x = khalimsky_circle(static_cast<int>(state.range(0))).space;
  for (auto _ : state) benchmark::DoNotOptimize(tc_exact(x, 4).lower);
}
BENCHMARK(BM_TcExact)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CatExactSquare(benchmark::State& state) {
  auto s = khalimsky_circle(static_cast<int>(state.range(0))).space;
  auto x = product(s, s);
  for (auto _ : state) benchmark::DoNotOptimize(cat_exact(x, 4).lower);
}
BENCHMARK(BM_CatExactSquare)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TwoPieceArgument(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(two_piece_argument(4).impossible());
}
BENCHMARK(BM_TwoPieceArgument)->Unit(benchmark::kMillisecond);

static void BM_VerifyBundle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bundle(k, ChainVariant::repaired).passed());
}
BENCHMARK(BM_VerifyBundle)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
