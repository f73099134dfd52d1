#pragma once

#include <optional>
#include <string_view>

#include "grodel/spectral.hpp"

namespace grodel {

enum class MeasureKind {
    TotalEffectiveResistance,  // n * tr(L+); connected graphs only
    ForestIndex,               // n * tr((L+I)^{-1}) - n; finite everywhere
    TotalHarmonicResistance,   // sum of reciprocal pairwise resistances
};

std::string_view measure_tag(MeasureKind m);  // "rr" | "fi" | "thr"
std::optional<MeasureKind> measure_from_tag(std::string_view tag);

/// n * tr(linv); equals the sum of r(u,v) over all pairs. Throws for
/// disconnected graphs (the sum would be infinite).
double total_effective_resistance(const PseudoinverseState& st);

/// Sum of 1/r(u,v) over unordered pairs; disconnected pairs contribute zero.
/// Iterates same-component pairs only, with compensated accumulation.
double total_harmonic_resistance(const PseudoinverseState& st);

/// omega[u,u] - 2 omega[u,v] + omega[v,v]; finite for all pairs. Throws if u == v.
double forest_distance(const DenseMatrix& omega, NodeId u, NodeId v);

/// n * tr((L+I)^{-1}) - n; equals the sum of forest distances over all pairs.
double forest_index(const Graph& g);

/// g plus a universal vertex (id n) adjacent to every original node.
Graph augment_graph(const Graph& g);

/// Forest index of the original n-node graph computed from the pseudoinverse
/// of its augmented graph: n * tr(linv*) - (n+1) * linv*[n,n].
double forest_index_augmented(const PseudoinverseState& st_star, NodeId n);

}  // namespace grodel
