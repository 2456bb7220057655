#include "burgers/analysis.hpp"
#include "burgers/stepper.hpp"

#include <benchmark/benchmark.h>

using namespace burgers;

namespace {

void BM_FullStep(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  const ProblemSpec p = traveling_wave(2.0);
  const GridSpec g = make_grid(M, M * M, 1.0);
  StageBuffers bufs(sample_initial(p, g));
  int n = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(full_step(bufs, g, n, p));
    bufs.advance();
    n = (n + 1) % g.N;
  }
  st.SetItemsProcessed(st.iterations() * (M + 1) * (M + 1));
}

void BM_StageX(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  const GridSpec g = make_grid(M, 1, 1.0);
  const State in = sample_initial(traveling_wave(64.0), g);
  State out(M);
  for (auto _ : st) {
    stage_x(in, out, 1e-4, 64.0);
    benchmark::ClobberMemory();
  }
}

void BM_StageY(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  const GridSpec g = make_grid(M, 1, 1.0);
  const State in = sample_initial(traveling_wave(64.0), g);
  State out(M);
  for (auto _ : st) {
    stage_y(in, out, 1e-4, 64.0);
    benchmark::ClobberMemory();
  }
}

void BM_RunWithErrors(benchmark::State& st) {
  const int M = static_cast<int>(st.range(0));
  const ProblemSpec p = traveling_wave(64.0);
  const GridSpec g = make_grid(M, 4 * M, 1.0);
  for (auto _ : st) {
    benchmark::DoNotOptimize(run_with_errors(p, g).l2_spacetime_u);
  }
}

} // namespace

BENCHMARK(BM_FullStep)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_StageX)->Arg(64)->Arg(256);
BENCHMARK(BM_StageY)->Arg(64)->Arg(256);
BENCHMARK(BM_RunWithErrors)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
