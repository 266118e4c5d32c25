#pragma once

#include <string>
#include <variant>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

/// Two maximal independent sets of different sizes (well-coveredness
/// counterexample).
struct TwoMaximalSets {
    VertexSet set1;
    VertexSet set2;
};

/// An independent set that is not contained in any maximum independent set.
struct NonExtendableSet {
    VertexSet set;
};

/// An independent set avoiding N[v] that dominates N(v) (shedding
/// counterexample for v).
struct DominatingWitness {
    VertexSet set;
};

/// A list of vertex sets; used for partitions and for tuples of disjoint
/// independent sets that cannot be completed.
struct PartitionWitness {
    std::vector<VertexSet> parts;
};

/// A failing removal set from the subset-removal characterization of Wk.
/// If alpha_dropped, set1 is a maximum independent set of G and set2 one of
/// G - removed; otherwise set1 and set2 are maximal independent sets of
/// G - removed with different sizes. Ids refer to the caller's graph.
struct SubsetRemovalFailure {
    VertexSet removed;
    bool alpha_dropped = false;
    VertexSet set1;
    VertexSet set2;
};

/// Partition of V into closed neighborhoods of simplicial vertices, with the
/// number of simplicial vertices each part contains.
struct SimplexPartition {
    std::vector<VertexSet> parts;
    std::vector<int> simplicial_counts;
};

/// Partition of V into alpha(G) maximal cliques.
struct MaximalCliquePartition {
    std::vector<VertexSet> parts;
};

/// A vertex adjacent to every vertex of a clique part formed after its own
/// removal (1-extendability counterexample on chordal graphs).
struct CliqueDominationFailure {
    int vertex = -1;
    VertexSet part;
};

using Certificate =
    std::variant<std::monostate, TwoMaximalSets, NonExtendableSet, DominatingWitness,
                 PartitionWitness, SubsetRemovalFailure, SimplexPartition, MaximalCliquePartition,
                 CliqueDominationFailure>;

struct Verdict {
    bool holds = false;
    Certificate certificate;

    static Verdict yes() { return {true, {}}; }
    static Verdict yes(Certificate c) { return {true, std::move(c)}; }
    static Verdict no() { return {false, {}}; }
    static Verdict no(Certificate c) { return {false, std::move(c)}; }
};

/// A recognizer query: which graph-class membership is being decided.
struct ClassQuery {
    enum class Kind { WellCovered, Wk, KExtendable, Es, BGraph, Shedding };

    Kind kind = Kind::WellCovered;
    int parameter = 0;  // k for Wk/KExtendable, s for Es, vertex id for Shedding

    static ClassQuery well_covered() { return {Kind::WellCovered, 0}; }
    static ClassQuery wk(int k) { return {Kind::Wk, k}; }
    static ClassQuery k_extendable(int k) { return {Kind::KExtendable, k}; }
    static ClassQuery es(int s) { return {Kind::Es, s}; }
    static ClassQuery b_graph() { return {Kind::BGraph, 0}; }
    static ClassQuery shedding(int v) { return {Kind::Shedding, v}; }

    std::string to_string() const;
};

}  // namespace wellcov
