// Microbenchmarks for the hot paths: free-algebra series exponentials,
// character tables, graded tensor-power traces, and partition enumeration.

#include <symprod/class_function.hpp>
#include <symprod/gen_series.hpp>
#include <symprod/graded_class.hpp>
#include <symprod/oracle.hpp>
#include <symprod/partition.hpp>
#include <symprod/permutation.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace symprod;

GradedClass sample_class() {
  return GradedClass(ClassKind::HirzebruchMinusY,
                     {{0, LaurentY(Rational(1)) + LaurentY::y()},
                      {1, LaurentY(Rational(1), -1)}},
                     "c");
}

std::map<int, GradedClass> sample_payloads(int N) {
  std::map<int, GradedClass> b;
  for (int r = 1; r <= N; ++r)
    b.emplace(r, GradedClass(ClassKind::Todd,
                             {{0, LaurentY(Rational(1))}, {1, LaurentY(Rational(r), 0)}},
                             "b" + std::to_string(r)));
  return b;
}

void BM_AbstractSeries(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  auto b = sample_payloads(N);
  for (auto _ : state) benchmark::DoNotOptimize(abstract_series(b, N));
}
BENCHMARK(BM_AbstractSeries)->Arg(4)->Arg(6)->Arg(8);

void BM_SymmetricProductSeries(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  GradedClass cl = sample_class();
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_product_series(cl, N));
}
BENCHMARK(BM_SymmetricProductSeries)->Arg(4)->Arg(8);

void BM_SchurDecompositionCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GradedClass cl = sample_class();
  for (auto _ : state) benchmark::DoNotOptimize(schur_decomposition_check(n, cl));
}
BENCHMARK(BM_SchurDecompositionCheck)->Arg(4)->Arg(5);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->Arg(5)->Arg(6)->Arg(7);

void BM_KunnethTraceDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto w = oracle::projective_line_model();
  auto sigmas = enumerate_symmetric_group(n);
  for (auto _ : state)
    for (const auto& sigma : sigmas)
      benchmark::DoNotOptimize(oracle::kunneth_trace(w, sigma, oracle::TraceRoute::Dense));
}
BENCHMARK(BM_KunnethTraceDense)->Arg(3)->Arg(4);

void BM_KunnethTraceCycleWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto w = oracle::projective_line_model();
  auto sigmas = enumerate_symmetric_group(n);
  for (auto _ : state)
    for (const auto& sigma : sigmas)
      benchmark::DoNotOptimize(oracle::kunneth_trace(w, sigma, oracle::TraceRoute::CycleWalk));
}
BENCHMARK(BM_KunnethTraceCycleWalk)->Arg(3)->Arg(4);

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
}
BENCHMARK(BM_EnumeratePartitions)->Arg(15)->Arg(25);

void BM_OrbifoldEuler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbifold_euler(n, Rational(2)));
}
BENCHMARK(BM_OrbifoldEuler)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
