#include "wellcov/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "wellcov/errors.hpp"

namespace wellcov {

VertexSet VertexSet::of(std::initializer_list<int> ids) {
    return from_unsorted(std::vector<int>(ids));
}

VertexSet VertexSet::from_unsorted(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

VertexSet VertexSet::from_bitset(const DynamicBitset& bits) {
    VertexSet s;
    s.ids_ = bits.to_vector();
    return s;
}

DynamicBitset VertexSet::to_bitset(int universe) const {
    DynamicBitset b(universe);
    for (int v : ids_) b.set(v);
    return b;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ids_[i]);
    }
    out += "}";
    return out;
}

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw OutOfRangeVertexError("vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw OutOfRangeVertexError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, n_);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::has_universal_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) == n_ - 1) return true;
    return false;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s) check_vertex(v, g.vertex_count());
    for (int v : s)
        for (int u : g.neighbors(v))
            if (u > v && s.contains(u)) return false;
    return true;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& targets) {
    for (int v : s) check_vertex(v, g.vertex_count());
    for (int t : targets) {
        check_vertex(t, g.vertex_count());
        if (s.contains(t)) continue;
        bool hit = false;
        for (int u : g.neighbors(t)) {
            if (s.contains(u)) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const DynamicBitset& keep) {
    int n = g.vertex_count();
    InducedSubgraph out;
    out.from_original.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (keep.test(v)) {
            out.from_original[v] = static_cast<int>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : out.to_original)
        for (int u : g.neighbors(v))
            if (u > v && keep.test(u))
                edges.emplace_back(out.from_original[v], out.from_original[u]);
    out.graph = Graph::build(static_cast<int>(out.to_original.size()), edges);
    return out;
}

InducedSubgraph remove_closed_neighborhood(const Graph& g, const VertexSet& s) {
    int n = g.vertex_count();
    for (int v : s) check_vertex(v, n);
    DynamicBitset keep(n);
    keep.set_all();
    for (int v : s) {
        keep.reset(v);
        for (int u : g.neighbors(v)) keep.reset(u);
    }
    return induced_subgraph(g, keep);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    long seen = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("edge list: bad header at line " + std::to_string(lineno));
            continue;
        }
        long u, v;
        if (!(ls >> u >> v))
            throw ParseError("edge list: bad edge at line " + std::to_string(lineno));
        if (++seen > m)
            throw ParseError("edge list: more than " + std::to_string(m) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range at line " + std::to_string(lineno));
        if (u == v)
            throw ParseError("edge list: self-loop at line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("edge list: missing header");
    if (seen != m)
        throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                         std::to_string(seen));
    return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace wellcov
