#include "grodel/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace grodel {

Graph::Graph(NodeId n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw std::invalid_argument("node count must be nonnegative");
    for (auto& e : edges_) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::erase_if(edges_, [](Edge e) { return e.u == e.v; });
    if (!std::is_sorted(edges_.begin(), edges_.end()))
        std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    std::vector<NodeId> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (NodeId v = 0; v < n_; ++v)
        adj_[v].reserve(deg[v]);
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
        return false;
    const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    NodeId other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(nb.begin(), nb.end(), other);
}

Graph read_edge_list(std::istream& in) {
    EdgeSet edges;
    NodeId max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos)
            continue;
        if (line[pos] == '#' || line[pos] == '%')
            continue;
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v) || u < 0 || v < 0)
            throw ParseError("malformed edge at line " + std::to_string(lineno), lineno);
        max_id = std::max(max_id, static_cast<NodeId>(std::max(u, v)));
        if (u != v)
            edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
    }
    if (max_id < 0)
        throw ParseError("empty edge list input");
    return Graph(max_id + 1, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

ComponentMap connected_components(const Graph& g) {
    const NodeId n = g.num_nodes();
    ComponentMap cm;
    cm.label.assign(n, -1);
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (cm.label[s] != -1)
            continue;
        int id = cm.num_components++;
        int size = 0;
        stack.push_back(s);
        cm.label[s] = id;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId y : g.neighbors(x)) {
                if (cm.label[y] == -1) {
                    cm.label[y] = id;
                    stack.push_back(y);
                }
            }
        }
        cm.sizes.push_back(size);
    }
    return cm;
}

LccResult largest_connected_component(const Graph& g) {
    if (g.num_nodes() < 1)
        throw std::invalid_argument("graph has no nodes");
    const auto cm = connected_components(g);
    // Labels are assigned in order of smallest member node, so the first
    // maximal-size label is the tie-break winner.
    int best = 0;
    for (int c = 1; c < cm.num_components; ++c)
        if (cm.sizes[c] > cm.sizes[best])
            best = c;

    LccResult res;
    res.old_to_new.assign(g.num_nodes(), -1);
    NodeId next = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (cm.label[v] == best)
            res.old_to_new[v] = next++;
    EdgeSet edges;
    for (const auto& e : g.edges())
        if (cm.label[e.u] == best && cm.label[e.v] == best)
            edges.push_back({res.old_to_new[e.u], res.old_to_new[e.v]});
    res.graph = Graph(next, std::move(edges));
    return res;
}

namespace {

struct DfsFrame {
    NodeId node;
    NodeId parent;
    std::size_t next_neighbor;
};

}  // namespace

EdgeSet find_bridges(const Graph& g) {
    const NodeId n = g.num_nodes();
    std::vector<int> disc(n, -1), low(n, 0);
    EdgeSet bridges;
    int timer = 0;
    std::vector<DfsFrame> stack;
    for (NodeId root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& f = stack.back();
            const auto& nb = g.neighbors(f.node);
            if (f.next_neighbor < nb.size()) {
                NodeId y = nb[f.next_neighbor++];
                if (disc[y] == -1) {
                    disc[y] = low[y] = timer++;
                    stack.push_back({y, f.node, 0});
                } else if (y != f.parent) {
                    low[f.node] = std::min(low[f.node], disc[y]);
                }
                // The parent edge is skipped exactly once per tree edge; a
                // simple graph has no parallel (node, parent) edges.
            } else {
                DfsFrame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    NodeId p = stack.back().node;
                    low[p] = std::min(low[p], low[done.node]);
                    if (low[done.node] > disc[p])
                        bridges.push_back(make_edge(p, done.node));
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

Graph remove_edge(const Graph& g, Edge e) {
    return remove_edges(g, {make_edge(e.u, e.v)});
}

Graph remove_edges(const Graph& g, const EdgeSet& s) {
    EdgeSet sorted = s;
    for (auto& e : sorted)
        e = make_edge(e.u, e.v);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& e : sorted)
        if (!g.has_edge(e))
            throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ") not in graph");
    EdgeSet kept;
    kept.reserve(g.num_edges());
    std::set_difference(g.edges().begin(), g.edges().end(), sorted.begin(), sorted.end(),
                        std::back_inserter(kept));
    return Graph(g.num_nodes(), std::move(kept));
}

}  // namespace grodel
