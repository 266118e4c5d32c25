#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

/// Vertex order in which every vertex's earlier-ordered neighbors form a
/// clique. Such an order exists iff the graph is chordal; the last vertex is
/// simplicial, and the property survives restriction to induced subgraphs.
struct PerfectEliminationOrdering {
    std::vector<int> order;
};

/// A chordless cycle on at least four vertices, listed in cyclic order.
struct InducedCycle {
    std::vector<int> vertices;
};

/// Nodes are exactly the maximal cliques; edges form one tree per connected
/// component, and for every vertex the nodes containing it induce a subtree.
struct CliqueTree {
    std::vector<VertexSet> nodes;
    std::vector<std::pair<int, int>> edges;
};

/// Lexicographic BFS from the lowest vertex id, validated by the
/// parent-subset test. Returns the ordering on chordal input and an induced
/// cycle witness otherwise. O(n+m) except for witness extraction.
std::variant<PerfectEliminationOrdering, InducedCycle> lex_bfs_peo(const Graph& g);

bool is_chordal(const Graph& g);

/// Clique tree from a valid elimination ordering. Throws NotChordalError on
/// non-chordal input and Error when the ordering is not a valid elimination
/// ordering of a chordal graph.
CliqueTree clique_tree(const Graph& g, const PerfectEliminationOrdering& peo);

/// Partition of V into simplices (closed neighborhoods of simplicial
/// vertices). Exists iff the chordal input is well-covered; parts are
/// ordered by their smallest vertex. Throws NotChordalError.
std::optional<SimplexPartition> simplex_partition(const Graph& g);

/// Wk membership for chordal graphs: a simplex partition must exist with at
/// least k simplicial vertices in every part. The partition is attached as
/// the certificate whenever it exists. Throws NotChordalError.
Verdict chordal_is_Wk(const Graph& g, int k);

/// 1-extendability for chordal graphs by greedy elimination: repeatedly cut
/// the closed neighborhood of a simplicial vertex, then verify that no vertex
/// is adjacent to all of a part formed after its own removal. Certificate:
/// MaximalCliquePartition on success, CliqueDominationFailure otherwise.
/// Throws NotChordalError.
Verdict chordal_is_1_extendable(const Graph& g);

}  // namespace wellcov
