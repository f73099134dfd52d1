#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace grodel {

using NodeId = std::int32_t;

/// Unordered node pair stored in canonical orientation (u < v).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Canonical edge collection: every member u < v, sorted ascending, no duplicates.
using EdgeSet = std::vector<Edge>;

/// Node-to-component labeling. Component ids are assigned in order of each
/// component's smallest member node; sum(sizes) == n.
struct ComponentMap {
    std::vector<int> label;
    std::vector<int> sizes;
    int num_components = 0;
};

/// Simple undirected graph over dense 0-based node ids. Immutable after
/// construction; mutating operations return new values.
class Graph {
public:
    Graph() = default;

    /// Canonicalizes the given edges: orients each pair as u < v, sorts,
    /// drops self-loops and duplicates. Throws if an endpoint is out of range.
    Graph(NodeId n, EdgeSet edges);

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const EdgeSet& edges() const { return edges_; }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[u]; }
    NodeId degree(NodeId u) const { return static_cast<NodeId>(adj_[u].size()); }
    bool has_edge(NodeId a, NodeId b) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency();

    NodeId n_ = 0;
    EdgeSet edges_;
    std::vector<std::vector<NodeId>> adj_;
};

/// Malformed input; `line` is 1-based when the error is tied to a line.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(what), line(line) {}
    int line = 0;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%' are
/// comments; a third column (weights) is ignored; self-loops are dropped and
/// reversed/duplicate pairs merged. n = 1 + max node id encountered.
Graph read_edge_list(std::istream& in);

/// Canonical writer: one "u v\n" line per edge, sorted, u < v, no comments.
void write_edge_list(const Graph& g, std::ostream& out);

struct LccResult {
    Graph graph;
    /// old id -> new id within the kept component, -1 for dropped nodes.
    std::vector<NodeId> old_to_new;
};

/// Induced subgraph on the largest component, ids compacted to [0, n') in
/// ascending original-id order. Ties between equal-size components go to the
/// one containing the smallest original id.
LccResult largest_connected_component(const Graph& g);

ComponentMap connected_components(const Graph& g);

/// Edges whose removal increases the number of components (DFS low-link).
EdgeSet find_bridges(const Graph& g);

/// Copy of g without e; the node set is unchanged. Throws if e is absent.
Graph remove_edge(const Graph& g, Edge e);

/// Copy of g without the given canonical edge set. Throws if any is absent.
Graph remove_edges(const Graph& g, const EdgeSet& s);

}  // namespace grodel
