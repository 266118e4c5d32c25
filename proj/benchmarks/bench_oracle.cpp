#include <benchmark/benchmark.h>

#include "wellcov/generators.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/oracle_algorithms.hpp"
#include "wellcov/sat_solver.hpp"

using namespace wellcov;

namespace {

Graph bench_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_graph(rng, n, 30);
}

void BM_AlphaBinarySearch(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)), 31);
    DpllSolver solver;
    for (auto _ : state) benchmark::DoNotOptimize(alpha_binary_search(g, solver).first);
}
BENCHMARK(BM_AlphaBinarySearch)->Arg(15)->Arg(25)->Arg(35);

void BM_EsViaOracleCombined(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)), 32);
    DpllSolver solver;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            is_Es_via_oracle(g, 1, solver, OracleMode::Combined).first.holds);
}
BENCHMARK(BM_EsViaOracleCombined)->Arg(12)->Arg(18)->Arg(24);

void BM_DpllRandomThreeCnf(benchmark::State& state) {
    Rng rng(33);
    CnfFormula f = random_three_cnf(rng, static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(0)) * 4);
    DpllSolver solver;
    for (auto _ : state) benchmark::DoNotOptimize(solver.solve(f).has_value());
}
BENCHMARK(BM_DpllRandomThreeCnf)->Arg(20)->Arg(40)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
