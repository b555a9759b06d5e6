#include <benchmark/benchmark.h>

#include "unref/enumeration.hpp"

using namespace unref;

namespace {

void unrefinable(benchmark::State& state, Strategy strategy)
{
    const Part total = state.range(0);
    for (auto _ : state) {
        auto n = gen_unrefinable(total, strategy, [](const Partition&) { return true; },
                                 EnumConfig{2, Order::colex});
        benchmark::DoNotOptimize(n);
    }
}

void BM_BruteFilter(benchmark::State& state)
{
    unrefinable(state, Strategy::brute_filter);
}

void BM_PrunedSearch(benchmark::State& state)
{
    unrefinable(state, Strategy::pruned_search);
}

void BM_MaxLastPart(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(max_last_part(state.range(0)));
}

void BM_VisitDistinct(benchmark::State& state)
{
    for (auto _ : state) {
        auto n = visit_distinct(state.range(0), EnumConfig{}, [](std::span<const Part>) { return true; });
        benchmark::DoNotOptimize(n);
    }
}

void BM_CountDistinctDp(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(count_distinct(state.range(0)));
}

} // namespace

BENCHMARK(BM_BruteFilter)->Arg(40)->Arg(60)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrunedSearch)->Arg(40)->Arg(60)->Arg(80)->Arg(120)->Arg(136)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxLastPart)->Arg(66)->Arg(136)->Arg(210)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_VisitDistinct)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountDistinctDp)->Arg(150)->Arg(500);

BENCHMARK_MAIN();
