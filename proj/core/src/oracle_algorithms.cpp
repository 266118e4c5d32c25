#include "wellcov/oracle_algorithms.hpp"

#include <string>
#include <vector>

#include "wellcov/errors.hpp"
#include "wellcov/independent_sets.hpp"

namespace wellcov {

CnfFormula encode_mis_query(const MisQuery& q) {
    const Graph& g = q.graph;
    const int n = g.vertex_count();
    if (q.threshold > n)
        throw Error("threshold " + std::to_string(q.threshold) + " exceeds vertex count");
    for (int v : q.forced)
        if (v < 0 || v >= n)
            throw InfeasibleForcedError("forced vertex " + std::to_string(v) + " out of range");
    if (!is_independent(g, q.forced))
        throw InfeasibleForcedError("forced set " + q.forced.to_string() + " is not independent");

    std::vector<std::vector<int>> clauses;
    for (auto [u, v] : g.edges()) clauses.push_back({-(u + 1), -(v + 1)});
    for (int v : q.forced) clauses.push_back({v + 1});

    int num_vars = n;
    const int k = n - q.threshold;  // at most k selection variables may be false
    if (q.threshold >= 1 && k == 0) {
        for (int v = 0; v < n; ++v) clauses.push_back({v + 1});
    } else if (q.threshold >= 1 && k < n) {
        // Sequential counter over z_i = "vertex i-1 unselected"; the counter
        // variable s(i,j) means "at least j of z_1..z_i are true".
        num_vars = n + (n - 1) * k;
        auto s = [&](int i, int j) { return n + (i - 1) * k + j; };
        clauses.push_back({1, s(1, 1)});
        for (int j = 2; j <= k; ++j) clauses.push_back({-s(1, j)});
        for (int i = 2; i <= n - 1; ++i) {
            clauses.push_back({i, s(i, 1)});
            clauses.push_back({-s(i - 1, 1), s(i, 1)});
            for (int j = 2; j <= k; ++j) {
                clauses.push_back({i, -s(i - 1, j - 1), s(i, j)});
                clauses.push_back({-s(i - 1, j), s(i, j)});
            }
            clauses.push_back({i, -s(i - 1, k)});
        }
        clauses.push_back({n, -s(n - 1, k)});
    }
    return CnfFormula::make(num_vars, std::move(clauses));
}

std::pair<int, OracleStats> alpha_binary_search(const Graph& g, SatOracle& oracle) {
    OracleStats stats;
    const int n = g.vertex_count();
    if (n == 0) return {0, stats};
    const long long before = oracle.call_count();
    int lo = 1;
    int hi = n;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (oracle.solve(encode_mis_query({g, mid, {}})))
            lo = mid;
        else
            hi = mid - 1;
    }
    stats.calls = oracle.call_count() - before;
    return {lo, stats};
}

namespace {

/// Runs the extension queries for every independent set `sizes_from..sizes_to`
/// enumerates. PerSet: one oracle call per set, stopping at the first failure.
/// Combined: one call on the conjunction over disjoint variable copies.
std::pair<bool, OracleStats> extension_queries(const Graph& g, int r, int min_size, int max_size,
                                               SatOracle& oracle, OracleMode mode) {
    OracleStats stats;
    stats.mode = mode;
    const long long before = oracle.call_count();
    MaskGraph mg(g);
    DynamicBitset all = mg.all();
    bool ok = true;
    if (mode == OracleMode::PerSet) {
        detail::for_each_independent_set_up_to(mg, all, max_size, [&](const std::vector<int>& s) {
            if (static_cast<int>(s.size()) < min_size) return true;
            if (!oracle.solve(encode_mis_query({g, r, VertexSet::from_unsorted(s)}))) {
                ok = false;
                return false;
            }
            return true;
        });
    } else {
        int offset = 0;
        std::vector<std::vector<int>> clauses;
        detail::for_each_independent_set_up_to(mg, all, max_size, [&](const std::vector<int>& s) {
            if (static_cast<int>(s.size()) < min_size) return true;
            CnfFormula part = encode_mis_query({g, r, VertexSet::from_unsorted(s)});
            for (const auto& clause : part.clauses) {
                std::vector<int> shifted;
                shifted.reserve(clause.size());
                for (int lit : clause)
                    shifted.push_back(lit > 0 ? lit + offset : lit - offset);
                clauses.push_back(std::move(shifted));
            }
            offset += part.num_vars;
            return true;
        });
        if (offset > 0 || min_size == 0)
            ok = oracle.solve(CnfFormula::make(offset, std::move(clauses))).has_value();
    }
    stats.calls = oracle.call_count() - before;
    return {ok, stats};
}

}  // namespace

std::pair<bool, OracleStats> partial_s_extendable(const Graph& g, int r, int s, SatOracle& oracle,
                                                  OracleMode mode) {
    if (s < 1) throw Error("s must be >= 1");
    return extension_queries(g, r, 0, s, oracle, mode);
}

std::pair<bool, OracleStats> exact_k_extendable_queries(const Graph& g, int r, int k,
                                                        SatOracle& oracle, OracleMode mode) {
    if (k < 1) throw Error("k must be >= 1");
    return extension_queries(g, r, k, k, oracle, mode);
}

std::pair<Verdict, OracleStats> is_Es_via_oracle(const Graph& g, int s, SatOracle& oracle,
                                                 OracleMode mode) {
    if (s < 1) throw Error("s must be >= 1");
    auto [alpha, search_stats] = alpha_binary_search(g, oracle);
    auto [ok, query_stats] = partial_s_extendable(g, alpha, s, oracle, mode);
    OracleStats total{search_stats.calls + query_stats.calls, mode};
    return {ok ? Verdict::yes() : Verdict::no(), total};
}

}  // namespace wellcov
