#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wellcov/bitset.hpp"

namespace wellcov {

/// An ordered set of vertex ids (sorted ascending, no duplicates).
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet of(std::initializer_list<int> ids);
    static VertexSet from_unsorted(std::vector<int> ids);
    static VertexSet from_bitset(const DynamicBitset& bits);

    DynamicBitset to_bitset(int universe) const;

    bool contains(int v) const;
    void insert(int v);

    int size() const noexcept { return static_cast<int>(ids_.size()); }
    bool empty() const noexcept { return ids_.empty(); }
    const std::vector<int>& ids() const noexcept { return ids_; }

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
        return a.ids_ <=> b.ids_;
    }

    /// "{0, 2, 5}"
    std::string to_string() const;

private:
    std::vector<int> ids_;
};

/// Simple undirected graph with vertex ids 0..n-1. Immutable after
/// construction; all derived objects are new graphs.
class Graph {
public:
    Graph() = default;

    /// Validates ids, rejects self-loops, collapses duplicate edges.
    /// Throws OutOfRangeVertexError / SelfLoopError.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return m_; }

    /// Neighbor list of v, sorted ascending.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_universal_vertex() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// True iff no two members of s are adjacent. Throws OutOfRangeVertexError.
bool is_independent(const Graph& g, const VertexSet& s);

/// True iff every vertex of targets is in s or adjacent to a member of s.
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& targets);

/// An induced subgraph together with the id remapping in both directions.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> original id
    std::vector<int> from_original;  // original id -> new id, or -1 if dropped
};

/// Subgraph induced by the kept vertices (ids compacted, order preserved).
InducedSubgraph induced_subgraph(const Graph& g, const DynamicBitset& keep);

/// Deletes s together with every neighbor of a member of s.
InducedSubgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s);

/// Text format: first line "n m", then m lines "u v" (0-indexed); lines
/// starting with '#' are comments and blank lines are skipped.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

}  // namespace wellcov
