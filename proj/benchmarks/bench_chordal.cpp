#include <benchmark/benchmark.h>

#include <variant>

#include "wellcov/chordal.hpp"
#include "wellcov/generators.hpp"
#include "wellcov/graph.hpp"

using namespace wellcov;

namespace {

Graph bench_chordal_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_chordal_graph(rng, n, 40);
}

void BM_LexBfsPeo(benchmark::State& state) {
    Graph g = bench_chordal_graph(static_cast<int>(state.range(0)), 21);
    for (auto _ : state) benchmark::DoNotOptimize(lex_bfs_peo(g));
}
BENCHMARK(BM_LexBfsPeo)->Arg(50)->Arg(200)->Arg(800);

void BM_CliqueTree(benchmark::State& state) {
    Graph g = bench_chordal_graph(static_cast<int>(state.range(0)), 22);
    auto peo = std::get<PerfectEliminationOrdering>(lex_bfs_peo(g));
    for (auto _ : state) benchmark::DoNotOptimize(clique_tree(g, peo));
}
BENCHMARK(BM_CliqueTree)->Arg(50)->Arg(200)->Arg(800);

void BM_ChordalOneExtendable(benchmark::State& state) {
    Graph g = bench_chordal_graph(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) benchmark::DoNotOptimize(chordal_is_1_extendable(g).holds);
}
BENCHMARK(BM_ChordalOneExtendable)->Arg(50)->Arg(200)->Arg(800);

void BM_ChordalWk(benchmark::State& state) {
    Graph g = bench_chordal_graph(static_cast<int>(state.range(0)), 24);
    for (auto _ : state) benchmark::DoNotOptimize(chordal_is_Wk(g, 2).holds);
}
BENCHMARK(BM_ChordalWk)->Arg(50)->Arg(200)->Arg(800);

}  // namespace
