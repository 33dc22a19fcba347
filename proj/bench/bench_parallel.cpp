// Serial reference against the OpenMP expansions, on the six-point
// discrepancy combination: symbolic, and specialized at fixed rationals
// (more atoms per term, so heavier).

#include <benchmark/benchmark.h>
#include <omp.h>

#include "zagier/hyperlog/coproduct.hpp"
#include "zagier/identities/builders.hpp"

using namespace zagier;

namespace {

const IComb& workload(int which) {
  static const IComb symbolic = [] {
    Points6 p;
    const char* names[] = {"A", "B", "C", "D", "E", "F"};
    for (int i = 0; i < 6; ++i) p[i] = PPoint::variable(names[i]);
    return build_theorem3_discrepancy(p);
  }();
  static const IComb numeric = [] {
    const long nums[] = {3, -5, 7, 11, -13, 17}, dens[] = {2, 3, 5, 7, 4, 9};
    Points6 p;
    for (int i = 0; i < 6; ++i) p[i] = PPoint(FieldExpr(BigRational(nums[i], dens[i])));
    return build_theorem3_discrepancy(p);
  }();
  return which == 0 ? symbolic : numeric;
}

void BM_SymbolSerial(benchmark::State& state) {
  const IComb& c = workload(static_cast<int>(state.range(0)));
  prepare_logs(c);
  for (auto _ : state) benchmark::DoNotOptimize(symbol_serial(c, true));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.size()));
}

void BM_SymbolParallel(benchmark::State& state) {
  const IComb& c = workload(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  prepare_logs(c);
  for (auto _ : state) benchmark::DoNotOptimize(symbol(c, true));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.size()));
}

void BM_ChainSerial(benchmark::State& state) {
  const IComb& c = workload(static_cast<int>(state.range(0)));
  prepare_logs(c);
  for (auto _ : state) benchmark::DoNotOptimize(cobracket_chain_serial(c, true));
}

void BM_ChainParallel(benchmark::State& state) {
  const IComb& c = workload(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  prepare_logs(c);
  for (auto _ : state) benchmark::DoNotOptimize(cobracket_chain(c, true));
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (int w = 0; w <= 1; ++w)
    for (int t = 1; t <= max_threads; t *= 2) b->Args({w, t});
}

}  // namespace

BENCHMARK(BM_SymbolSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChainSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainParallel)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
