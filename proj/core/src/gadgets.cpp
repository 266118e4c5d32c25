#include "wellcov/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wellcov/errors.hpp"
#include "wellcov/recognizers.hpp"

namespace wellcov {

namespace {

using Kind = VertexRole::Kind;

void require_three_cnf(const CnfFormula& f) {
    if (!f.three_cnf)
        throw NotThreeCnfError("every clause must have exactly 3 literals");
}

void require_no_tautology(const CnfFormula& f) {
    for (int j = 0; j < f.clause_count(); ++j) {
        const auto& clause = f.clauses[j];
        for (int lit : clause)
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end())
                throw TautologicalClauseError("clause " + std::to_string(j + 1) +
                                              " contains a literal and its negation");
    }
}

void add_clique(std::vector<std::pair<int, int>>& edges, int first, int count) {
    for (int a = 0; a < count; ++a)
        for (int b = a + 1; b < count; ++b) edges.emplace_back(first + a, first + b);
}

VertexRole clause_role(int j) { return {Kind::CliqueK, j}; }

VertexRole var_role(int i, bool positive, int copy) {
    return {Kind::VarBlock, i, positive, copy};
}

int parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

/// s-fold g_plus of P3: in Es but not well-covered, so it is a faithful
/// stand-in output when the pre-test already knows the formula is
/// satisfiable. Checked exhaustively for small s.
const GadgetGraph& es_dummy(int s) {
    static std::map<int, GadgetGraph> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    Graph cur = Graph::build(3, {{0, 1}, {1, 2}});
    GadgetGraph out;
    for (int round = 0; round < s; ++round) {
        out = g_plus(cur);
        cur = out.graph;
    }
    if (s <= 2 && is_well_covered(out.graph).holds)
        throw Error("stand-in negative instance is well-covered");
    return cache.emplace(s, std::move(out)).first->second;
}

}  // namespace

std::string VertexRole::to_string() const {
    switch (kind) {
        case Kind::CliqueK: return "K:" + std::to_string(index);
        case Kind::Apex: return "apex";
        case Kind::CliqueU: return "U:" + std::to_string(index);
        case Kind::VarBlock:
            return "var:" + std::to_string(index) + (positive ? ":pos:" : ":neg:") +
                   std::to_string(copy);
        case Kind::TriangleU: return "tri_u:" + std::to_string(index);
        case Kind::TriangleUbar: return "tri_ubar:" + std::to_string(index);
        case Kind::TriangleW: return "tri_w:" + std::to_string(index);
        case Kind::OriginalG: return "orig_g:" + std::to_string(index);
        case Kind::OriginalH: return "orig_h:" + std::to_string(index);
        case Kind::PiSideG: return "pi_g:" + std::to_string(index);
        case Kind::PiSideH: return "pi_h:" + std::to_string(index);
        case Kind::DomCliqueC: return "dom_c:" + std::to_string(index);
        case Kind::DomI: return "dom_i:" + std::to_string(index);
        case Kind::DomIPrime: return "dom_ip:" + std::to_string(index);
    }
    throw Error("corrupt vertex role");
}

VertexRole VertexRole::parse(const std::string& text) {
    auto parts = split(text, ':');
    auto indexed = [&](Kind kind) -> VertexRole {
        if (parts.size() != 2) throw ParseError("malformed vertex role '" + text + "'");
        return {kind, parse_int(parts[1])};
    };
    if (parts[0] == "apex") {
        if (parts.size() != 1) throw ParseError("malformed vertex role '" + text + "'");
        return {Kind::Apex};
    }
    if (parts[0] == "K") return indexed(Kind::CliqueK);
    if (parts[0] == "U") return indexed(Kind::CliqueU);
    if (parts[0] == "var") {
        if (parts.size() != 4 || (parts[2] != "pos" && parts[2] != "neg"))
            throw ParseError("malformed vertex role '" + text + "'");
        return {Kind::VarBlock, parse_int(parts[1]), parts[2] == "pos", parse_int(parts[3])};
    }
    if (parts[0] == "tri_u") return indexed(Kind::TriangleU);
    if (parts[0] == "tri_ubar") return indexed(Kind::TriangleUbar);
    if (parts[0] == "tri_w") return indexed(Kind::TriangleW);
    if (parts[0] == "orig_g") return indexed(Kind::OriginalG);
    if (parts[0] == "orig_h") return indexed(Kind::OriginalH);
    if (parts[0] == "pi_g") return indexed(Kind::PiSideG);
    if (parts[0] == "pi_h") return indexed(Kind::PiSideH);
    if (parts[0] == "dom_c") return indexed(Kind::DomCliqueC);
    if (parts[0] == "dom_i") return indexed(Kind::DomI);
    if (parts[0] == "dom_ip") return indexed(Kind::DomIPrime);
    throw ParseError("unrecognized vertex role '" + text + "'");
}

GadgetGraph gadget_w2_shedding(const CnfFormula& f) {
    require_three_cnf(f);
    require_no_tautology(f);
    int m = f.clause_count();
    int apex = m;
    auto block = [&](int var) { return m + 1 + 4 * (var - 1); };

    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, m);
    for (int j = 0; j < m; ++j) edges.emplace_back(j, apex);
    for (int i = 1; i <= f.num_vars; ++i) add_clique(edges, block(i), 4);
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) {
            int base = block(std::abs(lit)) + (lit > 0 ? 0 : 2);
            edges.emplace_back(base, j);
            edges.emplace_back(base + 1, j);
        }

    GadgetGraph out;
    out.graph = Graph::build(m + 1 + 4 * f.num_vars, edges);
    out.roles.reserve(out.graph.vertex_count());
    for (int j = 1; j <= m; ++j) out.roles.push_back(clause_role(j));
    out.roles.push_back({Kind::Apex});
    for (int i = 1; i <= f.num_vars; ++i) {
        out.roles.push_back(var_role(i, true, 1));
        out.roles.push_back(var_role(i, true, 2));
        out.roles.push_back(var_role(i, false, 1));
        out.roles.push_back(var_role(i, false, 2));
    }
    out.distinguished = apex;
    return out;
}

GadgetGraph gadget_wk(const CnfFormula& f, int k) {
    if (k < 2) throw Error("k must be at least 2");
    require_three_cnf(f);
    require_no_tautology(f);
    int m = f.clause_count();
    auto block = [&](int var) { return m + (k - 1) + 2 * k * (var - 1); };

    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, m + k - 1);  // K, U, and the join between them
    for (int i = 1; i <= f.num_vars; ++i) add_clique(edges, block(i), 2 * k);
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j]) {
            int base = block(std::abs(lit)) + (lit > 0 ? 0 : k);
            for (int copy = 0; copy < k; ++copy) edges.emplace_back(base + copy, j);
        }

    GadgetGraph out;
    out.graph = Graph::build(m + (k - 1) + 2 * k * f.num_vars, edges);
    out.roles.reserve(out.graph.vertex_count());
    for (int j = 1; j <= m; ++j) out.roles.push_back(clause_role(j));
    for (int r = 1; r <= k - 1; ++r) out.roles.push_back({Kind::CliqueU, r});
    for (int i = 1; i <= f.num_vars; ++i) {
        for (int copy = 1; copy <= k; ++copy) out.roles.push_back(var_role(i, true, copy));
        for (int copy = 1; copy <= k; ++copy) out.roles.push_back(var_role(i, false, copy));
    }
    return out;
}

GadgetOrVerdict gadget_es_wellcovered(const CnfFormula& f, int s) {
    if (s < 1) throw Error("s must be at least 1");
    require_three_cnf(f);
    require_no_tautology(f);
    int m = f.clause_count();
    int nv = f.num_vars;

    // Pre-test: a satisfying partial assignment of at most s variables means
    // the built graph would not be Es, so answer directly instead.
    std::vector<int> vars;
    auto try_patterns = [&]() -> std::optional<Assignment> {
        int size = static_cast<int>(vars.size());
        for (unsigned pattern = 0; pattern < (1u << size); ++pattern) {
            Assignment a(nv);
            for (int b = 0; b < size; ++b) a.assign(vars[b], (pattern >> b) & 1u);
            if (evaluate(f, a) == Evaluation::Satisfied) return a;
        }
        return std::nullopt;
    };
    int cap = std::min(s, nv);
    for (int size = 0; size <= cap; ++size) {
        std::optional<Assignment> found;
        auto choose = [&](auto&& self, int next) -> void {
            if (found) return;
            if (static_cast<int>(vars.size()) == size) {
                found = try_patterns();
                return;
            }
            for (int v = next; v <= nv; ++v) {
                vars.push_back(v);
                self(self, v + 1);
                vars.pop_back();
                if (found) return;
            }
        };
        choose(choose, 1);
        if (found) {
            KnownNegative neg{.reason = {}, .witness = *found, .dummy = es_dummy(s)};
            neg.reason = found->assigned_count() == 0
                             ? "every clause is satisfied by the empty assignment"
                             : "every clause is satisfied by " + found->to_string();
            return neg;
        }
    }

    auto block = [&](int var) { return m + 3 * (var - 1); };
    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, m);
    for (int i = 1; i <= nv; ++i) add_clique(edges, block(i), 3);
    for (int j = 0; j < m; ++j)
        for (int lit : f.clauses[j])
            edges.emplace_back(block(std::abs(lit)) + (lit > 0 ? 0 : 1), j);

    GadgetGraph out;
    out.graph = Graph::build(m + 3 * nv, edges);
    out.roles.reserve(out.graph.vertex_count());
    for (int j = 1; j <= m; ++j) out.roles.push_back(clause_role(j));
    for (int i = 1; i <= nv; ++i) {
        out.roles.push_back({Kind::TriangleU, i});
        out.roles.push_back({Kind::TriangleUbar, i});
        out.roles.push_back({Kind::TriangleW, i});
    }
    return out;
}

GadgetGraph pi_join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    int hoff = ng;
    int pg = ng + nh;
    int ph = 2 * ng + nh;

    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(hoff + u, hoff + v);
    for (int u = 0; u < ng; ++u) edges.emplace_back(u, pg + u);
    for (int u = 0; u < nh; ++u) edges.emplace_back(hoff + u, ph + u);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) edges.emplace_back(pg + a, ph + b);

    GadgetGraph out;
    out.graph = Graph::build(2 * (ng + nh), edges);
    out.roles.reserve(out.graph.vertex_count());
    for (int u = 0; u < ng; ++u) out.roles.push_back({Kind::OriginalG, u});
    for (int u = 0; u < nh; ++u) out.roles.push_back({Kind::OriginalH, u});
    for (int u = 0; u < ng; ++u) out.roles.push_back({Kind::PiSideG, u});
    for (int u = 0; u < nh; ++u) out.roles.push_back({Kind::PiSideH, u});
    return out;
}

GadgetGraph g_plus(const Graph& g) { return pi_join(g, g); }

GadgetGraph mis_equality_to_1ext(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw Error("inputs must have at least one vertex");
    int n = std::max(g.vertex_count(), h.vertex_count());
    auto pad = [&](const Graph& x) {
        auto edges = x.edges();
        for (int v = x.vertex_count(); v < n; ++v)
            for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
        return Graph::build(n, edges);
    };
    return pi_join(pad(g), pad(h));
}

GadgetGraph domset_to_chordal_es(const Graph& g, DomsetEdgeRule rule) {
    int n = g.vertex_count();
    if (n == 0) throw Error("input must have at least one vertex");
    if (g.has_universal_vertex())
        throw UniversalVertexPresentError("input has a universal vertex");

    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, n);
    if (rule == DomsetEdgeRule::ClosedNeighborhood) {
        for (int v = 0; v < n; ++v) {
            edges.emplace_back(n + v, v);
            for (int w : g.neighbors(v)) edges.emplace_back(n + v, w);
            edges.emplace_back(n + v, 2 * n + v);
        }
    } else {
        for (auto [u, v] : g.edges()) {
            edges.emplace_back(n + v, v);
            edges.emplace_back(n + v, u);
            edges.emplace_back(n + v, 2 * n + v);
            edges.emplace_back(n + u, u);
            edges.emplace_back(n + u, v);
            edges.emplace_back(n + u, 2 * n + u);
        }
    }

    GadgetGraph out;
    out.graph = Graph::build(3 * n, edges);
    out.roles.reserve(3 * n);
    for (int v = 0; v < n; ++v) out.roles.push_back({Kind::DomCliqueC, v});
    for (int v = 0; v < n; ++v) out.roles.push_back({Kind::DomI, v});
    for (int v = 0; v < n; ++v) out.roles.push_back({Kind::DomIPrime, v});
    return out;
}

std::string write_role_map(const GadgetGraph& gadget) {
    std::string text;
    for (int v = 0; v < gadget.graph.vertex_count(); ++v) {
        text += std::to_string(v);
        text += '\t';
        text += gadget.roles[v].to_string();
        text += '\n';
    }
    return text;
}

std::vector<VertexRole> parse_role_map(std::string_view text) {
    std::map<int, VertexRole> by_vertex;
    for (std::string_view line : split(text, '\n')) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        size_t tab = line.find_first_of("\t ");
        if (tab == std::string_view::npos)
            throw ParseError("role map line needs 'vertex<TAB>role': '" + std::string(line) + "'");
        int vertex = parse_int(line.substr(0, tab));
        size_t start = line.find_first_not_of("\t ", tab);
        if (start == std::string_view::npos)
            throw ParseError("role map line needs 'vertex<TAB>role': '" + std::string(line) + "'");
        auto role = VertexRole::parse(std::string(line.substr(start)));
        if (!by_vertex.emplace(vertex, role).second)
            throw ParseError("duplicate role for vertex " + std::to_string(vertex));
    }
    std::vector<VertexRole> roles;
    roles.reserve(by_vertex.size());
    for (auto& [vertex, role] : by_vertex) {
        if (vertex != static_cast<int>(roles.size()))
            throw ParseError("role map must cover vertices 0..n-1 without gaps");
        roles.push_back(role);
    }
    return roles;
}

}  // namespace wellcov
