#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wellcov/cnf.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

/// What a gadget vertex stands for in its construction. `index` is the
/// 1-based clause/variable/position number for formula-derived roles and the
/// 0-based source-vertex id for graph-derived ones; `positive` and `copy`
/// are meaningful for VarBlock only.
struct VertexRole {
    enum class Kind {
        CliqueK,       // clause vertex v_j
        Apex,          // the distinguished vertex v
        CliqueU,       // u_r in the clique joined to K
        VarBlock,      // literal copy x_i^b or !x_i^b
        TriangleU,     // u_i in a variable triangle
        TriangleUbar,  // !u_i in a variable triangle
        TriangleW,     // w_i in a variable triangle
        OriginalG,     // vertex of the first input graph
        OriginalH,     // vertex of the second input graph
        PiSideG,       // pi_u over the first input graph
        PiSideH,       // pi_u over the second input graph
        DomCliqueC,    // c_v
        DomI,          // i_v
        DomIPrime,     // i'_v
    };

    Kind kind = Kind::CliqueK;
    int index = 0;
    bool positive = true;
    int copy = 0;

    bool operator==(const VertexRole&) const = default;

    std::string to_string() const;
    static VertexRole parse(const std::string& text);
};

struct GadgetGraph {
    Graph graph;
    std::vector<VertexRole> roles;  // one per vertex
    std::optional<int> distinguished;
};

/// The Es construction's pre-test found a small satisfying partial
/// assignment, so the reduction answers directly instead of building from
/// the formula. `dummy` is a stand-in negative instance (Es but not
/// well-covered).
struct KnownNegative {
    std::string reason;
    Assignment witness;
    std::optional<GadgetGraph> dummy;
};

using GadgetOrVerdict = std::variant<GadgetGraph, KnownNegative>;

/// Clause clique K, an apex vertex adjacent to all of K, a K4 block per
/// variable with two copies of each literal, and edges from both copies of a
/// literal to every clause it appears in. m+1+4n vertices; always
/// well-covered with alpha = n+1; the formula is unsatisfiable iff the
/// output is W2 iff the apex (the distinguished vertex) is shedding.
GadgetGraph gadget_w2_shedding(const CnfFormula& f);

/// Generalization with a (k-1)-clique U joined to K and K_{2k} variable
/// blocks holding k copies per literal. Always W_{k-1}; the formula is
/// unsatisfiable iff the output is Wk. Requires k >= 2.
GadgetGraph gadget_wk(const CnfFormula& f, int k);

/// Clause clique plus a triangle u_i, !u_i, w_i per variable. First tests
/// every partial assignment of at most s variables; if one satisfies all
/// clauses the formula is satisfiable and a KnownNegative with a dummy
/// instance is returned. Built outputs are Es with alpha = n+1 and are
/// well-covered iff the formula is unsatisfiable. Requires s >= 1.
GadgetOrVerdict gadget_es_wellcovered(const CnfFormula& f, int s);

/// Disjoint copies of G and H plus pendant shadows pi_u for every vertex and
/// a complete bipartite graph between the two shadow sides. 2(|G|+|H|)
/// vertices; alpha = max(|G|+alpha(H), |H|+alpha(G)).
GadgetGraph pi_join(const Graph& g, const Graph& h);

/// pi_join of two copies of G; in Es iff G is in E_{s-1}.
GadgetGraph g_plus(const Graph& g);

/// Pads the smaller input with universal vertices (appended with the highest
/// ids of its side) until both sides have equally many, then pi_join. The
/// result is 1-extendable iff alpha(G) = alpha(H). Inputs must be non-empty.
GadgetGraph mis_equality_to_1ext(const Graph& g, const Graph& h);

enum class DomsetEdgeRule {
    ClosedNeighborhood,  // i_v ~ c_w for every w in N[v]; i_v ~ i'_v always
    PerEdgeLiteral,      // edges added only per edge uv, as written
};

/// Clique C = {c_v}, independent sets I = {i_v} and I' = {i'_v}, with i_v
/// attached to the clique copies of its closed neighborhood and to i'_v.
/// Chordal, 1-extendable, alpha = n+1; not in Es iff G has a dominating set
/// of size at most s. Rejects empty inputs and inputs with a universal
/// vertex. The two edge rules differ only when G has isolated vertices.
GadgetGraph domset_to_chordal_es(const Graph& g,
                                 DomsetEdgeRule rule = DomsetEdgeRule::ClosedNeighborhood);

/// Sidecar serialization: one "vertex<TAB>role" line per vertex.
std::string write_role_map(const GadgetGraph& gadget);
std::vector<VertexRole> parse_role_map(std::string_view text);

}  // namespace wellcov
