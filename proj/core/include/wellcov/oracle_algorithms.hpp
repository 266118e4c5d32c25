#pragma once

#include <utility>

#include "wellcov/cnf.hpp"
#include "wellcov/graph.hpp"
#include "wellcov/sat_solver.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

enum class OracleMode { PerSet, Combined };

struct OracleStats {
    long long calls = 0;
    OracleMode mode = OracleMode::PerSet;
};

/// "Does G have an independent set of size >= threshold containing forced?"
struct MisQuery {
    Graph graph;
    int threshold = 0;
    VertexSet forced;
};

/// CNF with one selection variable per vertex (vertex v is variable v+1),
/// an exclusion clause per edge, unit clauses for forced vertices, and a
/// sequential-counter encoding of the size bound. Satisfiable iff the query
/// answer is yes. Throws InfeasibleForcedError when forced is not an
/// independent set of the graph.
CnfFormula encode_mis_query(const MisQuery& q);

/// Independence number by binary search on encode_mis_query thresholds.
/// Uses at most ceil(log2(n+1)) + 1 oracle calls; zero calls when n = 0.
std::pair<int, OracleStats> alpha_binary_search(const Graph& g, SatOracle& oracle);

/// "Can every independent set of size <= s be extended to an independent set
/// of size >= r?" PerSet mode asks one oracle query per such set (the empty
/// set included); Combined mode asks a single query on the conjunction of all
/// per-set formulas over disjoint variable copies.
std::pair<bool, OracleStats> partial_s_extendable(const Graph& g, int r, int s, SatOracle& oracle,
                                                  OracleMode mode = OracleMode::PerSet);

/// Like partial_s_extendable but quantifying only over independent sets of
/// size exactly k; with r = alpha(G) this decides k-extendability.
std::pair<bool, OracleStats> exact_k_extendable_queries(const Graph& g, int r, int k,
                                                        SatOracle& oracle,
                                                        OracleMode mode = OracleMode::PerSet);

/// Two-step E_s recognition: alpha_binary_search, then partial_s_extendable
/// with r = alpha. Combined mode totals at most ceil(log2(n+1)) + 2 calls.
std::pair<Verdict, OracleStats> is_Es_via_oracle(const Graph& g, int s, SatOracle& oracle,
                                                 OracleMode mode = OracleMode::PerSet);

}  // namespace wellcov
