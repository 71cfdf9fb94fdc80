#include <benchmark/benchmark.h>

#include "upho/congruence.hpp"
#include "upho/greedy.hpp"
#include "upho/series.hpp"
#include "upho/tpbuild.hpp"

namespace {

using namespace upho;

const Presentation& commutative3() {
  static const Presentation p = parse_presentation(
      "generators: a b c\nrel a b = b a\nrel a c = c a\nrel b c = c b\n");
  return p;
}

void BM_ClosurePruned(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(length_classes(commutative3(), k, ClosureEngine::pruned));
  }
}
BENCHMARK(BM_ClosurePruned)->DenseRange(4, 10, 2);

void BM_ClosureFull(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(length_classes(commutative3(), k, ClosureEngine::full));
  }
}
BENCHMARK(BM_ClosureFull)->DenseRange(4, 10, 2);

void BM_TypeTwoCounts(benchmark::State& state) {
  const Presentation p = build_type2_monoid(IntPolynomial{1, -3, 1});
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    GradedMonoid monoid(p);
    benchmark::DoNotOptimize(monoid.counts(k));
  }
}
BENCHMARK(BM_TypeTwoCounts)->DenseRange(6, 12, 3);

void BM_GreedyZero(benchmark::State& state) {
  const std::vector<std::uint64_t> b{1, 4, 15, 55, 200, 725, 2625, 9500};
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_zero_series(b, depth));
}
BENCHMARK(BM_GreedyZero)->DenseRange(3, 7, 2);

void BM_Toeplitz(benchmark::State& state) {
  const IntSeries s = series_divide(IntPolynomial{1, 2, 1}, IntPolynomial{1, -3, 1}, 8);
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_tp_check(s, m));
}
BENCHMARK(BM_Toeplitz)->DenseRange(1, 4, 1);

void BM_TpBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_tp_monoid(IntPolynomial{1, 1}, IntPolynomial{1, -5, 5}, 6));
  }
}
BENCHMARK(BM_TpBuild);

}  // namespace

BENCHMARK_MAIN();
