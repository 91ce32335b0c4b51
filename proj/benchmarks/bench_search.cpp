#include <benchmark/benchmark.h>

#include "polyvdw/search.hpp"

namespace {

void BM_CanonicalSearch(benchmark::State& state) {
    auto fam = polyvdw::PatternFamily::parse("y;2*y;3*y");
    for (auto _ : state) {
        auto result =
            polyvdw::canonical_vdw_number(fam, polyvdw::XDomain::Positive, state.range(0));
        benchmark::DoNotOptimize(result);
        state.counters["nodes"] = static_cast<double>(result.stats.nodes);
    }
}
BENCHMARK(BM_CanonicalSearch)->Arg(8)->Arg(12)->Arg(16);

void BM_MonoSearch2Colors(benchmark::State& state) {
    auto fam = polyvdw::PatternFamily::parse("y;2*y;3*y");
    for (auto _ : state) {
        auto result = polyvdw::mono_vdw_number(fam, 2, polyvdw::XDomain::AnyInteger, state.range(0));
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_MonoSearch2Colors)->Arg(9)->Arg(12);

}  // namespace
