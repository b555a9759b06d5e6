#include <benchmark/benchmark.h>

#include "unref/bijections.hpp"
#include "unref/constructions.hpp"
#include "unref/enumeration.hpp"

using namespace unref;

namespace {

// every d for one n, by construction
void BM_ConstructAll(benchmark::State& state)
{
    const Part n = state.range(0);
    for (auto _ : state)
        for (Part d = 1; d <= n - 1; ++d)
            benchmark::DoNotOptimize(construct_all_maximal(n, d));
}

// the same cells through the bijection, where it applies
void BM_Bijection(benchmark::State& state)
{
    const Part n = state.range(0);
    for (auto _ : state)
        for (Part d = 1; d <= n - 1; ++d)
            if (table_regime(n, d))
                benchmark::DoNotOptimize(generate_via_bijection(n, d));
}

// and through exhaustive search, for scale
void BM_OracleAll(benchmark::State& state)
{
    const Part n = state.range(0);
    for (auto _ : state)
        for (Part d = 1; d <= n - 1; ++d)
            benchmark::DoNotOptimize(maximal_unrefinable_partitions(triangular_number(n) - d));
}

} // namespace

BENCHMARK(BM_ConstructAll)->DenseRange(12, 24, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Bijection)->DenseRange(12, 24, 4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OracleAll)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
