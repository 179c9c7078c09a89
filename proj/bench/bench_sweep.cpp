#include "magnon/config.hpp"
#include "magnon/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace magnon;

namespace {

void run_map(benchmark::State& state, Execution exec) {
  const RunConfig cfg = preset("fig2");
  const auto ks = cfg.path.points(cfg.lattice);
  SweepOptions opts;
  opts.execution = exec;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto map = entanglement_map(cfg.model, cfg.resolved_pulse(), cfg.lattice, ks, cfg.references,
                                cfg.thetas, opts);
    benchmark::DoNotOptimize(map.cells.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ks.size() * cfg.thetas.size()));
}

void BM_EntanglementSerial(benchmark::State& state) { run_map(state, Execution::Serial); }
void BM_EntanglementParallel(benchmark::State& state) { run_map(state, Execution::Parallel); }

void BM_Dispersion(benchmark::State& state) {
  const RunConfig cfg = preset("fig2");
  RunConfig dense = cfg;
  dense.path.samples = 256;
  const auto ks = dense.path.points(dense.lattice);
  SweepOptions opts;
  opts.execution = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : state) {
    auto rows = dispersion_sweep(cfg.model, cfg.resolved_pulse(), cfg.lattice, ks, opts);
    benchmark::DoNotOptimize(rows.data());
  }
}

} // namespace

BENCHMARK(BM_EntanglementSerial)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EntanglementParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dispersion)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
