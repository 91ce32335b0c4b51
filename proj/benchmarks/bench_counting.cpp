#include <benchmark/benchmark.h>

#include "polyvdw/counting.hpp"
#include "polyvdw/fourier.hpp"
#include "polyvdw/util.hpp"

namespace {

std::vector<int64_t> seeded_set(int64_t size, int64_t range, uint64_t seed) {
    polyvdw::SplitMix64 rng(seed);
    std::vector<int64_t> values;
    for (int64_t i = 0; i < size; ++i) values.push_back(rng.next_in(0, range));
    return polyvdw::normalize_set(std::move(values));
}

void BM_PairCount(benchmark::State& state) {
    auto set = seeded_set(state.range(0), 10 * state.range(0), 7);
    auto f = polyvdw::IntPolynomial::parse("y^2");
    for (auto _ : state)
        benchmark::DoNotOptimize(polyvdw::pair_count(set, f, 64));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 64);
}
BENCHMARK(BM_PairCount)->Arg(256)->Arg(2048)->Arg(16384);

void BM_MomentHistogram(benchmark::State& state) {
    auto f = polyvdw::IntPolynomial::parse("y^2");
    polyvdw::CountingQuery query{f, state.range(0), 8};
    for (auto _ : state)
        benchmark::DoNotOptimize(polyvdw::moment_count(query));
}
BENCHMARK(BM_MomentHistogram)->Arg(25)->Arg(100)->Arg(400);

void BM_MomentIntegral(benchmark::State& state) {
    auto f = polyvdw::IntPolynomial::parse("y^2");
    polyvdw::CountingQuery query{f, state.range(0), 4};
    for (auto _ : state)
        benchmark::DoNotOptimize(polyvdw::moment_integral(query));
}
BENCHMARK(BM_MomentIntegral)->Arg(6)->Arg(12)->Arg(24);

}  // namespace
