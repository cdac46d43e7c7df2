#include <benchmark/benchmark.h>

#include <random>

#include "tropical/assignment.hpp"
#include "tropical/cells.hpp"
#include "tropical/constructions.hpp"
#include "tropical/rank.hpp"
#include "tropical/tropoly.hpp"

namespace tropical {
namespace {

TropMatrix random_square(std::size_t n, int hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, hi);
  std::vector<Rational> e;
  for (std::size_t k = 0; k < n * n; ++k) e.emplace_back(d(rng));
  return TropMatrix(n, n, std::move(e));
}

void BM_Tropdet(benchmark::State& state) {
  const TropMatrix a = random_square(state.range(0), 1000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tropdet(a).value);
}
BENCHMARK(BM_Tropdet)->RangeMultiplier(2)->Range(4, 64);

void BM_EnumerateTies(benchmark::State& state) {
  const TropMatrix a = random_square(state.range(0), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimizing(a, kUnlimited).witnesses.size());
}
BENCHMARK(BM_EnumerateTies)->DenseRange(4, 8, 2);

void BM_RankFano7Sym(benchmark::State& state) {
  const TropMatrix f = builtin("fano7_sym");
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_tropical_rank(f, Parallelism{1}).rank);
}
BENCHMARK(BM_RankFano7Sym)->Unit(benchmark::kMillisecond);

void BM_SymRankFano13(benchmark::State& state) {
  const TropMatrix f = builtin("fano13_sym");
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_tropical_rank(f, Parallelism{1}).rank);
}
BENCHMARK(BM_SymRankFano13)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_CellFano7Sym(benchmark::State& state) {
  const TropMatrix f = builtin("fano7_sym");
  for (auto _ : state) {
    benchmark::DoNotOptimize(cell_dimension(f, 4, RankMode::kStandard, kDefaultCap, Parallelism{1}).dimension);
  }
}
BENCHMARK(BM_CellFano7Sym)->Unit(benchmark::kMillisecond);

void BM_MinorStream(benchmark::State& state) {
  for (auto _ : state) {
    MinorStream s(6, 6, state.range(0), RankMode::kSymmetric);
    std::size_t terms = 0;
    while (auto m = s.next()) terms += m->poly.size();
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_MinorStream)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tropical

BENCHMARK_MAIN();
