#include <benchmark/benchmark.h>

#include "polyvdw/coloring.hpp"
#include "polyvdw/pattern.hpp"

namespace {

void BM_CountInstances(benchmark::State& state) {
    auto fam = polyvdw::PatternFamily::parse("y;2*y;y^2");
    for (auto _ : state)
        benchmark::DoNotOptimize(
            polyvdw::count_instances(fam, state.range(0), polyvdw::XDomain::AnyInteger));
}
BENCHMARK(BM_CountInstances)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ScanColoring(benchmark::State& state) {
    auto fam = polyvdw::PatternFamily::parse("y;2*y;y^2");
    auto coloring = polyvdw::Coloring::random(state.range(0), 64, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            polyvdw::scan_coloring(coloring, fam, polyvdw::XDomain::AnyInteger));
    state.SetItemsProcessed(
        state.iterations() *
        static_cast<int64_t>(polyvdw::count_instances(fam, state.range(0),
                                                      polyvdw::XDomain::AnyInteger)));
}
BENCHMARK(BM_ScanColoring)->Arg(1000)->Arg(10000);

void BM_WindowDensity(benchmark::State& state) {
    auto coloring = polyvdw::Coloring::random(state.range(0), 16, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(polyvdw::max_window_density(coloring, state.range(0) / 100 + 1));
}
BENCHMARK(BM_WindowDensity)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
