#include <benchmark/benchmark.h>

#include "wellcov/generators.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/independent_sets.hpp"
#include "wellcov/recognizers.hpp"

using namespace wellcov;

namespace {

Graph bench_graph(int n, int percent, std::uint64_t seed) {
    Rng rng(seed);
    return random_graph(rng, n, percent);
}

void BM_IndependenceNumber(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)), 30, 11);
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(20)->Arg(40)->Arg(60);

void BM_MaximalIndependentSets(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)), 30, 12);
    for (auto _ : state) {
        long long count = 0;
        for_each_maximal_independent_set(g, [&](const VertexSet&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_MaximalIndependentSets)->Arg(16)->Arg(22)->Arg(28);

void BM_WellCovered(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)), 30, 13);
    for (auto _ : state) benchmark::DoNotOptimize(is_well_covered(g).holds);
}
BENCHMARK(BM_WellCovered)->Arg(14)->Arg(18)->Arg(22);

}  // namespace
