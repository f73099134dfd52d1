#pragma once

#include <cstdint>

#include "grodel/graph.hpp"

namespace grodel {

/// rows x cols 4-neighbor lattice; node id = row*cols + col.
Graph grid_graph(int rows, int cols);

/// rows x cols lattice plus two pendant nodes, one attached to the middle
/// node of the leftmost column and one to the middle node of the rightmost
/// column. Requires odd rows (so a middle row exists).
Graph hotdog_graph(int rows, int cols);

/// Preferential attachment: starts from `attach` isolated seed nodes; each
/// new node links to `attach` distinct existing nodes sampled proportionally
/// to degree (the first new node links to all seeds). Always connected.
Graph barabasi_albert_graph(int attach, int n_max, std::uint64_t seed);

/// Ring lattice joining each node to its `neighbors` nearest nodes on each
/// side, then every lattice edge is rewired with probability p to a uniformly
/// random non-neighbor. Result is reduced to a simple graph.
Graph watts_strogatz_graph(int n, int neighbors, double p, std::uint64_t seed);

}  // namespace grodel
