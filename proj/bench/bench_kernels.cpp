// Serial reference loops against the OpenMP batch kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "liouville/batch.hpp"
#include "liouville/parser.hpp"

namespace {

using namespace liouville;

LaurentQ random_laurent(std::mt19937_64& rng, int lo, int hi) {
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  LaurentQ p;
  for (int k = lo; k <= hi; ++k)
    if (keep(rng)) p.add(k, Rational(num(rng), den(rng)));
  return p;
}

const std::vector<CoefficientPair>& pairs() {
  static const std::vector<CoefficientPair> fg = [] {
    std::mt19937_64 rng(7);
    std::vector<CoefficientPair> out;
    for (int i = 0; i < 256; ++i) out.emplace_back(random_laurent(rng, -2, 3), random_laurent(rng, -2, 3));
    return out;
  }();
  return fg;
}

const std::vector<LaurentQ>& potentials() {
  static const std::vector<LaurentQ> pots = [] {
    std::mt19937_64 rng(8);
    std::vector<LaurentQ> out;
    for (int i = 0; i < 64; ++i) {
      LaurentQ L = random_laurent(rng, -3, 1);
      L.set(-(1 + i % 4), Rational(1 + i % 3));
      L.set(2, Rational(1));
      out.push_back(L);
    }
    return out;
  }();
  return pots;
}

void BM_DeltaSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(delta_batch_serial(pairs(), static_cast<int>(st.range(0))));
}
void BM_DeltaParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(delta_batch(pairs(), static_cast<int>(st.range(0))));
}
void BM_PolySolutionSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(has_poly_solution_batch_serial(pairs(), static_cast<int>(st.range(0))));
}
void BM_PolySolutionParallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(has_poly_solution_batch(pairs(), static_cast<int>(st.range(0))));
}
void BM_SolveSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve_batch_serial(potentials(), 6));
}
void BM_SolveParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(solve_batch(potentials(), 6));
}

}  // namespace

BENCHMARK(BM_DeltaSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PolySolutionSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PolySolutionParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SolveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
