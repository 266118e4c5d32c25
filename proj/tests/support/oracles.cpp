#include "oracles.hpp"

#include <bit>
#include <stdexcept>

namespace testsupport {

using wellcov::Assignment;
using wellcov::CnfFormula;
using wellcov::Graph;
using wellcov::VertexSet;

namespace {

VertexSet set_from_mask(unsigned mask) {
    std::vector<int> ids;
    for (int v = 0; mask >> v; ++v)
        if (mask & (1u << v)) ids.push_back(v);
    return VertexSet::from_unsorted(std::move(ids));
}

void require_small(const Graph& g) {
    if (g.vertex_count() > 20) throw std::runtime_error("test oracle limited to 20 vertices");
}

}  // namespace

bool mask_independent(const Graph& g, unsigned mask) {
    for (auto [u, v] : g.edges())
        if ((mask & (1u << u)) && (mask & (1u << v))) return false;
    return true;
}

bool mask_dominates(const Graph& g, unsigned mask) {
    unsigned covered = mask;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask & (1u << v))
            for (int w : g.neighbors(v)) covered |= 1u << w;
    return covered == (g.vertex_count() == 0 ? 0u : (1u << g.vertex_count()) - 1u);
}

std::vector<VertexSet> brute_maximal_independent_sets(const Graph& g) {
    require_small(g);
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!mask_independent(g, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask & (1u << v)) && mask_independent(g, mask | (1u << v))) maximal = false;
        if (maximal) out.push_back(set_from_mask(mask));
    }
    return out;
}

int brute_independence_number(const Graph& g) {
    require_small(g);
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.vertex_count()); ++mask)
        if (mask_independent(g, mask)) best = std::max(best, std::popcount(mask));
    return best;
}

bool brute_well_covered(const Graph& g) {
    auto sets = brute_maximal_independent_sets(g);
    for (const auto& s : sets)
        if (s.size() != sets.front().size()) return false;
    return true;
}

bool brute_k_extendable(const Graph& g, int k) {
    require_small(g);
    const int n = g.vertex_count();
    const int alpha = brute_independence_number(g);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k || !mask_independent(g, mask)) continue;
        bool extends = false;
        for (unsigned super = 0; super < (1u << n) && !extends; ++super)
            if ((super & mask) == mask && std::popcount(super) == alpha &&
                mask_independent(g, super))
                extends = true;
        if (!extends) return false;
    }
    return true;
}

bool brute_es(const Graph& g, int s) {
    for (int k = 1; k <= s; ++k)
        if (!brute_k_extendable(g, k)) return false;
    return true;
}

bool brute_shedding(const Graph& g, int v) {
    require_small(g);
    const int n = g.vertex_count();
    unsigned closed = 1u << v;
    unsigned open = 0;
    for (int w : g.neighbors(v)) {
        closed |= 1u << w;
        open |= 1u << w;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if ((mask & closed) || !mask_independent(g, mask)) continue;
        unsigned covered = mask;
        for (int u = 0; u < n; ++u)
            if (mask & (1u << u))
                for (int w : g.neighbors(u)) covered |= 1u << w;
        if ((covered & open) == open) return false;
    }
    return true;
}

int brute_min_dominating_set(const Graph& g) {
    require_small(g);
    const int n = g.vertex_count();
    for (int size = 0; size <= n; ++size)
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == size && mask_dominates(g, mask)) return size;
    return n;
}

std::optional<Assignment> brute_sat(const CnfFormula& f) {
    if (f.num_vars > 20) throw std::runtime_error("test oracle limited to 20 variables");
    for (unsigned long long bits = 0; bits < (1ull << f.num_vars); ++bits) {
        Assignment a(f.num_vars);
        for (int var = 1; var <= f.num_vars; ++var)
            a.assign(var, (bits >> (f.num_vars - var)) & 1ull);
        if (evaluate(f, a) == wellcov::Evaluation::Satisfied) return a;
    }
    return std::nullopt;
}

bool elimination_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (int round = 0; round < n; ++round) {
        int simplicial = -1;
        for (int v = 0; v < n && simplicial < 0; ++v) {
            if (gone[v]) continue;
            bool clique = true;
            const auto& nb = g.neighbors(v);
            for (std::size_t i = 0; i < nb.size() && clique; ++i) {
                if (gone[nb[i]]) continue;
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    if (!gone[nb[j]] && !g.has_edge(nb[i], nb[j])) clique = false;
            }
            if (clique) simplicial = v;
        }
        if (simplicial < 0) return false;
        gone[simplicial] = true;
    }
    return true;
}

std::vector<VertexSet> brute_maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> complement_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) complement_edges.emplace_back(u, v);
    return brute_maximal_independent_sets(Graph::build(n, complement_edges));
}

Graph graph_from_mask(int n, unsigned long long mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

std::vector<Graph> all_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(1ull << pairs);
    for (unsigned long long mask = 0; mask < (1ull << pairs); ++mask)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

}  // namespace testsupport
