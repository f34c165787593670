#include <benchmark/benchmark.h>

#include <random>

#include "ilpq/index.hpp"
#include "ilpq/verify.hpp"

namespace {

using namespace ilpq;

Text bench_text(std::size_t n, std::size_t alphabet) {
    std::mt19937_64 rng(n * 31 + alphabet);
    return random_text(rng, n, alphabet);
}

void BM_BuildIndex(benchmark::State& state) {
    const Text text = bench_text(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        Index idx = Index::build(text);
        benchmark::DoNotOptimize(idx);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildIndex)->RangeMultiplier(10)->Range(1'000, 1'000'000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BuildEertree(benchmark::State& state) {
    const Text text = bench_text(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        Eertree tree = Eertree::build(text);
        benchmark::DoNotOptimize(tree);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildEertree)->ArgsProduct({{100'000, 1'000'000}, {2, 4, 26}})->Unit(benchmark::kMillisecond);

void BM_BuildEertreePeriodic(benchmark::State& state) {
    const Text text(std::string(static_cast<std::size_t>(state.range(0)), 'a'));
    for (auto _ : state) {
        Eertree tree = Eertree::build(text);
        benchmark::DoNotOptimize(tree);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildEertreePeriodic)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Manacher(benchmark::State& state) {
    const Text text = bench_text(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
        MPArray mp = compute_mp(text);
        benchmark::DoNotOptimize(mp);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Manacher)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
