#pragma once

#include <functional>
#include <vector>

#include "wellcov/bitset.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

/// Adjacency-mask view of a graph, used by the exponential-time searches.
/// adj[v] is the open neighborhood of v.
struct MaskGraph {
    int n = 0;
    std::vector<DynamicBitset> adj;

    MaskGraph() = default;
    explicit MaskGraph(const Graph& g);

    DynamicBitset all() const {
        DynamicBitset b(n);
        b.set_all();
        return b;
    }

    /// Union of {v} and N(v) over all set bits of s.
    DynamicBitset closed_neighborhood(const DynamicBitset& s) const {
        DynamicBitset out = s;
        s.for_each_set([&](int v) { out |= adj[v]; });
        return out;
    }
};

namespace detail {

/// Visits the maximal independent sets of the subgraph induced by `active`,
/// in lexicographic order of their sorted member lists (vertex ids are the
/// caller's ids, untouched). The visitor returns false to stop early.
/// Returns false iff stopped early.
///
/// Include-first depth-first search over the active vertices in id order.
/// A vertex may be excluded only if it already has a chosen neighbor or
/// still has an undecided one; a final domination check catches the rest.
template <class F>
bool for_each_maximal_independent_set(const MaskGraph& g, const DynamicBitset& active, F&& visit) {
    const std::vector<int> order = active.to_vector();
    const int k = static_cast<int>(order.size());
    DynamicBitset chosen(g.n), remaining = active, uncovered(g.n);
    // dominated[d] is the domination mask at depth d (preallocated stack).
    std::vector<DynamicBitset> dominated(k + 1, DynamicBitset(g.n));
    std::vector<int> members;
    members.reserve(k);

    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == k) {
            uncovered = active;
            uncovered.subtract(chosen);
            uncovered.subtract(dominated[pos]);
            if (uncovered.none())
                return visit(static_cast<const std::vector<int>&>(members));
            return true;
        }
        int v = order[pos];
        remaining.reset(v);
        bool cont = true;
        if (!g.adj[v].intersects(chosen)) {
            members.push_back(v);
            chosen.set(v);
            dominated[pos + 1] = dominated[pos];
            dominated[pos + 1] |= g.adj[v];
            cont = self(self, pos + 1);
            chosen.reset(v);
            members.pop_back();
            if (cont && (dominated[pos].test(v) || g.adj[v].intersects(remaining))) {
                dominated[pos + 1] = dominated[pos];
                cont = self(self, pos + 1);
            }
        } else {
            dominated[pos + 1] = dominated[pos];
            cont = self(self, pos + 1);
        }
        remaining.set(v);
        return cont;
    };
    return rec(rec, 0);
}

/// Branch and bound on the subgraph induced by `active`: branches on a
/// maximum-degree vertex (lowest id on ties), include vs exclude with
/// closed-neighborhood deletion. If `witness` is non-null it receives one
/// maximum independent set (the first one attained).
int independence_number(const MaskGraph& g, const DynamicBitset& active,
                        DynamicBitset* witness = nullptr);

/// Visits every independent subset of `active` with at most max_size
/// members, in lexicographic order of sorted member lists (the empty set
/// first). The visitor returns false to stop. Returns false iff stopped.
template <class F>
bool for_each_independent_set_up_to(const MaskGraph& g, const DynamicBitset& active, int max_size,
                                    F&& visit) {
    std::vector<int> members;
    if (max_size < 0) return true;
    members.reserve(max_size);
    std::vector<DynamicBitset> blocked(max_size + 1, DynamicBitset(g.n));
    auto rec = [&](auto&& self, int from) -> bool {
        int depth = static_cast<int>(members.size());
        if (!visit(static_cast<const std::vector<int>&>(members))) return false;
        if (depth == max_size) return true;
        for (int v = active.find_next(from - 1); v != -1; v = active.find_next(v)) {
            if (blocked[depth].test(v)) continue;
            members.push_back(v);
            blocked[depth + 1] = blocked[depth];
            blocked[depth + 1] |= g.adj[v];
            bool cont = self(self, v + 1);
            members.pop_back();
            if (!cont) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// Maximal independent sets in deterministic lexicographic order.
/// The visitor returns false to stop the stream early.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Independence number by branch and bound.
int independence_number(const Graph& g);

/// One maximum independent set (deterministic).
VertexSet maximum_independent_set(const Graph& g);

}  // namespace wellcov
