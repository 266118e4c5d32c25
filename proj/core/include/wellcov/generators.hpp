#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wellcov/cnf.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

/// Seeded mt19937_64 reduced by modulo, so a given seed yields the same
/// sequence on every platform (uniform_int_distribution does not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Value in [0, n); requires n >= 1.
    int below(int n);

    /// True with probability percent/100.
    bool chance(int percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Each vertex pair becomes an edge independently with probability
/// edge_percent/100, pairs drawn in lexicographic order.
Graph random_graph(Rng& rng, int n, int edge_percent);

/// Resamples random_graph until no vertex is universal. Rejects n = 1 (a
/// single vertex is always universal) and gives up after many failures.
Graph random_graph_no_universal(Rng& rng, int n, int edge_percent);

/// Chordal by construction: each new vertex is attached to a random subset
/// of a previously recorded clique (members kept with keep_percent/100), so
/// the reverse insertion order is a perfect elimination ordering.
Graph random_chordal_graph(Rng& rng, int n, int keep_percent = 60);

/// num_clauses clauses of exactly 3 independently drawn literals each,
/// resampling any clause that contains a literal and its negation. Repeated
/// literals and repeated clauses are allowed. Requires num_vars >= 1 unless
/// num_clauses = 0.
CnfFormula random_three_cnf(Rng& rng, int num_vars, int num_clauses);

/// Every formula with num_vars in [0, max_vars] and at most max_clauses
/// distinct non-tautological 3-literal clauses (clauses are multisets of
/// literals; formulas are subsets of the clause pool, enumerated smaller
/// first, then lexicographically).
std::vector<CnfFormula> all_small_three_cnf(int max_vars, int max_clauses);

/// All labeled graphs for every n whose count fits the budget (n <= 5),
/// then seeded samples of mixed density for the remaining sizes, splitting
/// the leftover budget evenly. At most cap graphs in total.
std::vector<Graph> graph_catalog(int max_n, int cap, std::uint64_t seed);

}  // namespace wellcov
