#include <cstdint>

#include <benchmark/benchmark.h>

#include "vlhawkes/backward.hpp"
#include "vlhawkes/forward.hpp"
#include "vlhawkes/phase.hpp"
#include "vlhawkes/random.hpp"
#include "vlhawkes/stats.hpp"

namespace {

using namespace vlhawkes;

void BM_BackwardRun(benchmark::State& state) {
  const NetworkConfig config;
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto result = backward_run(config, derive_seed(1, k++));
    benchmark::DoNotOptimize(result.n_stop);
  }
}
BENCHMARK(BM_BackwardRun);

void BM_ForwardRun(benchmark::State& state) {
  const NetworkConfig config;
  // A long clan history: first seed family member with at least 200 jumps.
  BackwardResult backward;
  for (std::uint64_t k = 0; backward.jumps.size() < 200; ++k) {
    backward = backward_run(config, derive_seed(2, k));
  }
  const auto jumps = chronological(backward);
  for (auto _ : state) {
    auto result = forward_run(jumps, config);
    benchmark::DoNotOptimize(result.final_potential);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(jumps.size()));
}
BENCHMARK(BM_ForwardRun);

void BM_RunReplicate(benchmark::State& state) {
  NetworkConfig config;
  config.kernel.decay = static_cast<double>(state.range(0)) / 10.0;
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto summary = run_replicate(config, 3, k++, 1'000'000);
    benchmark::DoNotOptimize(summary.backward_steps);
  }
}
BENCHMARK(BM_RunReplicate)->Arg(20)->Arg(1);

void BM_BranchingSimulate(benchmark::State& state) {
  BranchingConfig config;
  config.delta = static_cast<double>(state.range(0)) / 4.0;
  config.cap = 1000;
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto outcome = branching_simulate(config, derive_seed(4, k++));
    benchmark::DoNotOptimize(outcome.events);
  }
}
BENCHMARK(BM_BranchingSimulate)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
