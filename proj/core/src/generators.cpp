#include "wellcov/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "wellcov/errors.hpp"

namespace wellcov {

int Rng::below(int n) {
    if (n < 1) throw Error("Rng::below needs a positive bound");
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

Graph random_graph(Rng& rng, int n, int edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph random_graph_no_universal(Rng& rng, int n, int edge_percent) {
    if (n == 1) throw Error("every one-vertex graph has a universal vertex");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(rng, n, edge_percent);
        if (!g.has_universal_vertex()) return g;
    }
    throw Error("could not sample a graph without a universal vertex");
}

Graph random_chordal_graph(Rng& rng, int n, int keep_percent) {
    std::vector<std::vector<int>> cliques = {{}};
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        const auto& base = cliques[rng.below(static_cast<int>(cliques.size()))];
        std::vector<int> attached;
        for (int u : base)
            if (rng.chance(keep_percent)) attached.push_back(u);
        for (int u : attached) edges.emplace_back(u, v);
        attached.push_back(v);
        cliques.push_back(std::move(attached));
    }
    return Graph::build(n, edges);
}

CnfFormula random_three_cnf(Rng& rng, int num_vars, int num_clauses) {
    if (num_vars < 1 && num_clauses > 0)
        throw Error("clauses need at least one variable to draw literals from");
    std::vector<std::vector<int>> clauses;
    clauses.reserve(num_clauses);
    while (static_cast<int>(clauses.size()) < num_clauses) {
        std::vector<int> clause(3);
        for (int& lit : clause) {
            int pick = rng.below(2 * num_vars);
            int var = pick / 2 + 1;
            lit = (pick % 2 == 0) ? var : -var;
        }
        bool tautological = false;
        for (int lit : clause)
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) tautological = true;
        if (!tautological) clauses.push_back(std::move(clause));
    }
    return CnfFormula::make(num_vars, std::move(clauses));
}

namespace {

/// Non-tautological 3-literal clauses over 1..num_vars as sorted multisets
/// of literals, literals ordered 1, -1, 2, -2, ...
std::vector<std::vector<int>> clause_pool(int num_vars) {
    std::vector<int> literals;
    for (int v = 1; v <= num_vars; ++v) {
        literals.push_back(v);
        literals.push_back(-v);
    }
    std::vector<std::vector<int>> pool;
    int count = static_cast<int>(literals.size());
    for (int a = 0; a < count; ++a)
        for (int b = a; b < count; ++b)
            for (int c = b; c < count; ++c) {
                std::vector<int> clause = {literals[a], literals[b], literals[c]};
                bool tautological = false;
                for (int lit : clause)
                    if (std::find(clause.begin(), clause.end(), -lit) != clause.end())
                        tautological = true;
                if (!tautological) pool.push_back(std::move(clause));
            }
    return pool;
}

}  // namespace

std::vector<CnfFormula> all_small_three_cnf(int max_vars, int max_clauses) {
    std::vector<CnfFormula> out;
    for (int nv = 0; nv <= max_vars; ++nv) {
        auto pool = clause_pool(nv);
        int pool_size = static_cast<int>(pool.size());
        std::vector<int> picked;
        auto emit = [&]() {
            std::vector<std::vector<int>> clauses;
            clauses.reserve(picked.size());
            for (int idx : picked) clauses.push_back(pool[idx]);
            out.push_back(CnfFormula::make(nv, std::move(clauses)));
        };
        for (int size = 0; size <= std::min(max_clauses, pool_size); ++size) {
            auto choose = [&](auto&& self, int from) -> void {
                if (static_cast<int>(picked.size()) == size) {
                    emit();
                    return;
                }
                for (int idx = from; idx < pool_size; ++idx) {
                    picked.push_back(idx);
                    self(self, idx + 1);
                    picked.pop_back();
                }
            };
            choose(choose, 0);
        }
    }
    return out;
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

}  // namespace

std::vector<Graph> graph_catalog(int max_n, int cap, std::uint64_t seed) {
    std::vector<Graph> out;
    std::vector<int> sampled_sizes;
    for (int n = 0; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        if (pairs <= 10) {
            for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
                if (static_cast<int>(out.size()) == cap) return out;
                out.push_back(graph_from_mask(n, mask));
            }
        } else {
            sampled_sizes.push_back(n);
        }
    }
    Rng rng(seed);
    for (size_t i = 0; i < sampled_sizes.size(); ++i) {
        int budget = (cap - static_cast<int>(out.size())) /
                     static_cast<int>(sampled_sizes.size() - i);
        for (int q = 0; q < budget; ++q)
            out.push_back(random_graph(rng, sampled_sizes[i], rng.below(101)));
    }
    return out;
}

}  // namespace wellcov
