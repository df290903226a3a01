// Serial reference vs OpenMP sweep kernels on the two workloads the verify
// command runs: de Rham vanishing over a box and the Killing identity over
// admissible b.

#include <benchmark/benchmark.h>

#include "tvindex/generators.hpp"
#include "tvindex/sweep.hpp"

namespace {

using namespace tvi;

struct Workload {
  PreparedSetup setup;
  std::vector<WeightVector> bs;
};

const Workload& de_rham_cp3() {
  static const Workload w{PreparedSetup(gen_cpn(3)), box_vectors(4, 8)};
  return w;
}

const Workload& killing_cp4() {
  static const Workload w = [] {
    PreparedSetup p(gen_cpn(4, std::nullopt, OperatorKind::signature));
    auto bs = admissible_vectors(p, 12);
    return Workload{std::move(p), std::move(bs)};
  }();
  return w;
}

void BM_DeRhamSerial(benchmark::State& state) {
  const auto& w = de_rham_cp3();
  for (auto _ : state) benchmark::DoNotOptimize(serial::index_values(w.setup, w.bs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.bs.size()));
}

void BM_DeRhamParallel(benchmark::State& state) {
  const auto& w = de_rham_cp3();
  set_thread_limit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::index_values(w.setup, w.bs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.bs.size()));
  set_thread_limit(0);
}

void BM_KillingSerial(benchmark::State& state) {
  const auto& w = killing_cp4();
  for (auto _ : state) benchmark::DoNotOptimize(serial::signature_sums(w.setup, w.bs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.bs.size()));
}

void BM_KillingParallel(benchmark::State& state) {
  const auto& w = killing_cp4();
  set_thread_limit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::signature_sums(w.setup, w.bs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(w.bs.size()));
  set_thread_limit(0);
}

}  // namespace

BENCHMARK(BM_DeRhamSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeRhamParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_KillingSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KillingParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
