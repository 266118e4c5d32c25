#include "wellcov/chordal.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "wellcov/bitset.hpp"
#include "wellcov/errors.hpp"

namespace wellcov {

namespace {

/// Lex-BFS visit order via partition refinement: the next vertex always comes
/// from the front class, and the visited vertex's unvisited neighbors are
/// split off into a fresh class just ahead of their old one. Lowest id wins
/// all ties. O(n+m).
std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    if (n == 0) return order;

    struct Cls {
        int head = -1, tail = -1, prev = -1, next = -1;
        int split = -1, stamp = -1;
    };
    std::vector<Cls> cls(1);
    std::vector<int> vnext(n, -1), vprev(n, -1), vcls(n, 0);
    std::vector<char> visited(n, 0);
    int first = 0;

    auto append = [&](int c, int v) {
        vcls[v] = c;
        vprev[v] = cls[c].tail;
        vnext[v] = -1;
        if (cls[c].tail == -1)
            cls[c].head = v;
        else
            vnext[cls[c].tail] = v;
        cls[c].tail = v;
    };
    auto unlink = [&](int v) {
        int c = vcls[v];
        if (vprev[v] == -1)
            cls[c].head = vnext[v];
        else
            vnext[vprev[v]] = vnext[v];
        if (vnext[v] == -1)
            cls[c].tail = vprev[v];
        else
            vprev[vnext[v]] = vprev[v];
    };

    for (int v = 0; v < n; ++v) append(0, v);

    for (int step = 0; step < n; ++step) {
        while (cls[first].head == -1) first = cls[first].next;
        int v = cls[first].head;
        unlink(v);
        visited[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (visited[w]) continue;
            int c = vcls[w];
            int target = cls[c].stamp == step ? cls[c].split : -1;
            if (target == -1) {
                target = static_cast<int>(cls.size());
                cls.push_back({});
                cls[target].next = c;
                cls[target].prev = cls[c].prev;
                if (cls[c].prev != -1) cls[cls[c].prev].next = target;
                cls[c].prev = target;
                cls[c].stamp = step;
                cls[c].split = target;
                if (c == first) first = target;
            }
            unlink(w);
            append(target, w);
        }
    }
    return order;
}

/// Parent-subset validity test: with p(v) the latest-ordered earlier neighbor
/// of v, every other earlier neighbor of v must also neighbor p(v). Passing
/// for all v is equivalent to the order being a valid elimination ordering.
bool elimination_order_valid(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::vector<int>> required(n);
    for (int v = 0; v < n; ++v) {
        int parent = -1;
        for (int w : g.neighbors(v))
            if (pos[w] < pos[v] && (parent == -1 || pos[w] > pos[parent])) parent = w;
        if (parent == -1) continue;
        for (int w : g.neighbors(v))
            if (pos[w] < pos[v] && w != parent) required[parent].push_back(w);
    }
    std::vector<char> mark(n, 0);
    for (int p = 0; p < n; ++p) {
        if (required[p].empty()) continue;
        for (int w : g.neighbors(p)) mark[w] = 1;
        bool ok = true;
        for (int x : required[p])
            if (!mark[x]) ok = false;
        for (int w : g.neighbors(p)) mark[w] = 0;
        if (!ok) return false;
    }
    return true;
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
    auto at = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), at, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

/// First chordless cycle found by scanning open triples (x, v, p) in lex
/// order and connecting x to p while avoiding the rest of N[v]. Any graph
/// that fails the elimination-order test has one.
InducedCycle find_induced_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                int x = nbrs[a], p = nbrs[b];
                if (g.has_edge(x, p)) continue;
                std::fill(parent.begin(), parent.end(), -2);
                parent[v] = -3;
                for (int w : nbrs)
                    if (w != x && w != p) parent[w] = -3;
                std::deque<int> queue{x};
                parent[x] = -1;
                while (!queue.empty() && parent[p] == -2) {
                    int u = queue.front();
                    queue.pop_front();
                    for (int w : g.neighbors(u)) {
                        if (parent[w] != -2) continue;
                        parent[w] = u;
                        queue.push_back(w);
                        if (w == p) break;
                    }
                }
                if (parent[p] == -2) continue;
                std::vector<int> cycle{v};
                for (int u = p; u != -1; u = parent[u]) cycle.push_back(u);
                std::reverse(cycle.begin() + 1, cycle.end());
                return InducedCycle{normalize_cycle(std::move(cycle))};
            }
        }
    }
    throw Error("no chordless cycle found");
}

NotChordalError not_chordal(const Graph& g) {
    return NotChordalError("graph is not chordal", find_induced_cycle(g).vertices);
}

}  // namespace

std::variant<PerfectEliminationOrdering, InducedCycle> lex_bfs_peo(const Graph& g) {
    std::vector<int> order = lex_bfs_order(g);
    if (!elimination_order_valid(g, order)) return find_induced_cycle(g);
    return PerfectEliminationOrdering{std::move(order)};
}

bool is_chordal(const Graph& g) { return elimination_order_valid(g, lex_bfs_order(g)); }

CliqueTree clique_tree(const Graph& g, const PerfectEliminationOrdering& peo) {
    const int n = g.vertex_count();
    const std::vector<int>& order = peo.order;
    if (static_cast<int>(order.size()) != n) throw Error("ordering has wrong length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) throw Error("ordering is not a permutation");
        pos[v] = i;
    }
    if (!elimination_order_valid(g, order)) {
        if (is_chordal(g)) throw Error("ordering is not a valid elimination ordering");
        throw not_chordal(g);
    }

    CliqueTree tree;
    std::vector<DynamicBitset> masks;
    std::vector<int> sizes;
    std::vector<int> clique_of(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int parent = -1;
        int earlier = 0;
        for (int w : g.neighbors(v))
            if (pos[w] < i) {
                ++earlier;
                if (parent == -1 || pos[w] > pos[parent]) parent = w;
            }
        if (parent == -1) {
            masks.emplace_back(n);
            masks.back().set(v);
            sizes.push_back(1);
            clique_of[v] = static_cast<int>(masks.size()) - 1;
            continue;
        }
        int cp = clique_of[parent];
        if (earlier == sizes[cp]) {
            // The earlier neighbors are exactly the parent's clique: grow it.
            masks[cp].set(v);
            ++sizes[cp];
            clique_of[v] = cp;
        } else {
            masks.emplace_back(n);
            DynamicBitset& node = masks.back();
            for (int w : g.neighbors(v))
                if (pos[w] < i) node.set(w);
            node.set(v);
            sizes.push_back(earlier + 1);
            clique_of[v] = static_cast<int>(masks.size()) - 1;
            tree.edges.emplace_back(clique_of[v], cp);
        }
    }
    tree.nodes.reserve(masks.size());
    for (const auto& mask : masks) tree.nodes.push_back(VertexSet::from_bitset(mask));
    return tree;
}

std::optional<SimplexPartition> simplex_partition(const Graph& g) {
    auto peo = lex_bfs_peo(g);
    if (std::holds_alternative<InducedCycle>(peo))
        throw NotChordalError("graph is not chordal", std::get<InducedCycle>(peo).vertices);
    CliqueTree tree = clique_tree(g, std::get<PerfectEliminationOrdering>(peo));

    const int n = g.vertex_count();
    std::vector<int> clique_count(n, 0);
    for (const auto& node : tree.nodes)
        for (int v : node) ++clique_count[v];
    // A vertex is simplicial iff it lies in exactly one maximal clique; a
    // node is a simplex iff it contains a simplicial vertex. The partition
    // exists iff every vertex lies in exactly one simplex.
    std::vector<int> simplex_cover(n, 0);
    std::vector<std::pair<VertexSet, int>> parts;
    for (const auto& node : tree.nodes) {
        int simplicial = 0;
        for (int v : node)
            if (clique_count[v] == 1) ++simplicial;
        if (simplicial == 0) continue;
        for (int v : node) ++simplex_cover[v];
        parts.emplace_back(node, simplicial);
    }
    for (int v = 0; v < n; ++v)
        if (simplex_cover[v] != 1) return std::nullopt;

    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first.ids().front() < b.first.ids().front(); });
    SimplexPartition result;
    for (auto& [part, count] : parts) {
        result.parts.push_back(std::move(part));
        result.simplicial_counts.push_back(count);
    }
    return result;
}

Verdict chordal_is_Wk(const Graph& g, int k) {
    if (k < 1) throw Error("k must be >= 1");
    std::optional<SimplexPartition> sp = simplex_partition(g);
    if (!sp) return Verdict::no();
    for (int count : sp->simplicial_counts)
        if (count < k) return Verdict::no(std::move(*sp));
    return Verdict::yes(std::move(*sp));
}

Verdict chordal_is_1_extendable(const Graph& g) {
    auto peo = lex_bfs_peo(g);
    if (std::holds_alternative<InducedCycle>(peo))
        throw NotChordalError("graph is not chordal", std::get<InducedCycle>(peo).vertices);
    const std::vector<int>& order = std::get<PerfectEliminationOrdering>(peo).order;
    const int n = g.vertex_count();

    // Cut closed neighborhoods of simplicial vertices, back to front; the
    // restriction of the order stays valid, so the last live vertex is
    // always simplicial in the live subgraph.
    DynamicBitset alive(n);
    alive.set_all();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (!alive.test(v)) continue;
        int id = static_cast<int>(parts.size());
        std::vector<int> members{v};
        alive.reset(v);
        for (int w : g.neighbors(v))
            if (alive.test(w)) {
                members.push_back(w);
                alive.reset(w);
            }
        for (int w : members) part_of[w] = id;
        std::sort(members.begin(), members.end());
        parts.push_back(std::move(members));
    }

    // A part stays a maximal clique unless some earlier-removed vertex
    // neighbors all of it.
    std::vector<int> hits(parts.size(), 0);
    std::vector<int> stamp(parts.size(), -1);
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u)) {
            int p = part_of[w];
            if (p <= part_of[u]) continue;
            if (stamp[p] != u) {
                stamp[p] = u;
                hits[p] = 0;
            }
            if (++hits[p] == static_cast<int>(parts[p].size()))
                return Verdict::no(
                    CliqueDominationFailure{u, VertexSet::from_unsorted(parts[p])});
        }
    }

    std::sort(parts.begin(), parts.end());
    MaximalCliquePartition partition;
    for (auto& members : parts) partition.parts.push_back(VertexSet::from_unsorted(members));
    return Verdict::yes(std::move(partition));
}

}  // namespace wellcov
