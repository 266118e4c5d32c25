#include "wellcov/independent_sets.hpp"

namespace wellcov {

MaskGraph::MaskGraph(const Graph& g) : n(g.vertex_count()), adj(n, DynamicBitset(n)) {
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v].set(u);
}

namespace detail {

namespace {

struct BranchAndBound {
    const MaskGraph& g;
    int best = 0;
    DynamicBitset best_set;
    DynamicBitset chosen;
    std::vector<DynamicBitset> stack;  // preallocated active masks per depth
    bool track_witness = false;

    explicit BranchAndBound(const MaskGraph& graph)
        : g(graph), best_set(graph.n), chosen(graph.n),
          stack(graph.n + 1, DynamicBitset(graph.n)) {}

    void run(const DynamicBitset& active) {
        stack[0] = active;
        rec(0, 0);
    }

    void rec(int depth, int current) {
        const DynamicBitset& active = stack[depth];
        int remaining = active.count();
        if (current + remaining <= best) return;
        // Pick a maximum-degree vertex within the active set, lowest id on ties.
        int pick = -1, pick_deg = -1;
        for (int v = active.find_first(); v != -1; v = active.find_next(v)) {
            int d = (g.adj[v] & active).count();
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick_deg <= 0) {
            // Active set is independent; take all of it.
            best = current + remaining;
            if (track_witness) {
                best_set = chosen;
                best_set |= active;
            }
            return;
        }
        // Include pick.
        stack[depth + 1] = active;
        stack[depth + 1].subtract(g.adj[pick]);
        stack[depth + 1].reset(pick);
        if (track_witness) chosen.set(pick);
        rec(depth + 1, current + 1);
        if (track_witness) chosen.reset(pick);
        // Exclude pick.
        stack[depth + 1] = active;
        stack[depth + 1].reset(pick);
        rec(depth + 1, current);
    }
};

}  // namespace

int independence_number(const MaskGraph& g, const DynamicBitset& active, DynamicBitset* witness) {
    BranchAndBound bb(g);
    bb.track_witness = witness != nullptr;
    bb.run(active);
    if (witness) *witness = bb.best_set;
    return bb.best;
}

}  // namespace detail

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit) {
    MaskGraph mg(g);
    detail::for_each_maximal_independent_set(mg, mg.all(), [&](const std::vector<int>& members) {
        return visit(VertexSet::from_unsorted(members));
    });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

int independence_number(const Graph& g) {
    MaskGraph mg(g);
    return detail::independence_number(mg, mg.all());
}

VertexSet maximum_independent_set(const Graph& g) {
    MaskGraph mg(g);
    DynamicBitset w(mg.n);
    detail::independence_number(mg, mg.all(), &w);
    return VertexSet::from_bitset(w);
}

}  // namespace wellcov
