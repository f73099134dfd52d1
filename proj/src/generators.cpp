#include "grodel/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace grodel {

namespace {

// Draws mapped manually from raw engine output so that identical seeds give
// identical graphs independent of the standard library's distribution
// implementations.
std::uint64_t draw_index(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    const NodeId n = static_cast<NodeId>(rows) * cols;
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) +
                  static_cast<std::size_t>(cols) * (rows - 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            NodeId u = r * cols + c;
            if (c + 1 < cols)
                edges.push_back({u, u + 1});
            if (r + 1 < rows)
                edges.push_back({u, u + cols});
        }
    }
    return Graph(n, std::move(edges));
}

Graph hotdog_graph(int rows, int cols) {
    if (rows % 2 == 0)
        throw std::invalid_argument("hotdog requires an odd number of rows");
    Graph base = grid_graph(rows, cols);
    const NodeId n = base.num_nodes();
    EdgeSet edges = base.edges();
    const NodeId mid_left = (rows / 2) * cols;
    const NodeId mid_right = mid_left + cols - 1;
    edges.push_back({mid_left, n});
    edges.push_back({mid_right, static_cast<NodeId>(n + 1)});
    return Graph(n + 2, std::move(edges));
}

Graph barabasi_albert_graph(int attach, int n_max, std::uint64_t seed) {
    if (attach < 1 || n_max <= attach)
        throw std::invalid_argument("require attach >= 1 and n_max > attach");
    std::mt19937_64 rng(seed);
    EdgeSet edges;
    edges.reserve(static_cast<std::size_t>(n_max - attach) * attach);
    // Endpoints of existing edges, repeated; sampling an index uniformly is
    // sampling a node proportionally to its degree.
    std::vector<NodeId> repeated;
    for (NodeId v = attach; v < n_max; ++v) {
        std::set<NodeId> targets;
        if (repeated.empty()) {
            for (NodeId t = 0; t < attach; ++t)
                targets.insert(t);
        } else {
            while (static_cast<int>(targets.size()) < attach)
                targets.insert(repeated[draw_index(rng, repeated.size())]);
        }
        for (NodeId t : targets) {
            edges.push_back(make_edge(v, t));
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    return Graph(n_max, std::move(edges));
}

Graph watts_strogatz_graph(int n, int neighbors, double p, std::uint64_t seed) {
    if (neighbors < 1 || n <= neighbors)
        throw std::invalid_argument("require n > neighbors >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("rewiring probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::set<NodeId>> adj(n);
    for (NodeId u = 0; u < n; ++u) {
        for (int d = 1; d <= neighbors; ++d) {
            NodeId v = static_cast<NodeId>((u + d) % n);
            if (u != v) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    for (NodeId u = 0; u < n; ++u) {
        for (int d = 1; d <= neighbors; ++d) {
            NodeId v = static_cast<NodeId>((u + d) % n);
            if (u == v || !adj[u].contains(v))
                continue;
            if (draw_unit(rng) >= p)
                continue;
            adj[u].erase(v);
            adj[v].erase(u);
            if (static_cast<int>(adj[u].size()) >= n - 1) {
                // No non-neighbor left to rewire to; keep the lattice edge.
                adj[u].insert(v);
                adj[v].insert(u);
                continue;
            }
            NodeId w;
            do {
                w = static_cast<NodeId>(draw_index(rng, n));
            } while (w == u || adj[u].contains(w));
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }
    EdgeSet edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : adj[u])
            if (u < v)
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}  // namespace grodel
