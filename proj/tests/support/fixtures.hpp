#pragma once

#include <utility>
#include <vector>

#include "wellcov/graph.hpp"

namespace testsupport {

inline wellcov::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return wellcov::Graph::build(n, edges);
}

inline wellcov::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return wellcov::Graph::build(n, edges);
}

inline wellcov::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return wellcov::Graph::build(n, edges);
}

// Center 0, leaves 1..leaves.
inline wellcov::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return wellcov::Graph::build(leaves + 1, edges);
}

inline wellcov::Graph empty_graph(int n) { return wellcov::Graph::build(n, {}); }

}  // namespace testsupport
