// Serial reference vs OpenMP kernel, on the dodecahedron double unless noted.

#include <benchmark/benchmark.h>

#include "raag/diagram.hpp"

using namespace raag;

namespace {

const DefiningGraph& dd() {
  static const DefiningGraph g = dodecahedron_double();
  return g;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_EnumerateCycles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(dd(), 12, exec_of(state)));
}

void BM_TightCycles(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tight_cycles(dd(), static_cast<int>(dd().size()), exec_of(state)));
}

void BM_ScanLifts(benchmark::State& state) {
  static const FlatBall b = build_ball(dd(), 4);
  for (auto _ : state) benchmark::DoNotOptimize(scan_lifts(b, 9, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_EnumerateCycles)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TightCycles)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanLifts)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
