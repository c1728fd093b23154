#include <benchmark/benchmark.h>

#include "zf/harness.hpp"
#include "zf/reduction.hpp"

namespace {

void BM_ExtremalSearch(benchmark::State& st) {
    const auto exec = st.range(1) ? zf::Exec::parallel : zf::Exec::serial;
    for (auto _ : st)
        benchmark::DoNotOptimize(extremal_three_point_search(2.0, static_cast<int>(st.range(0)), exec));
}
BENCHMARK(BM_ExtremalSearch)->ArgsProduct({{50, 200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MainSuite(benchmark::State& st) {
    zf::HarnessConfig cfg;
    cfg.suite = zf::Suite::main;
    cfg.trials = 200;
    cfg.exec = st.range(0) ? zf::Exec::parallel : zf::Exec::serial;
    for (auto _ : st) benchmark::DoNotOptimize(zf::run_suite(cfg));
}
BENCHMARK(BM_MainSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
