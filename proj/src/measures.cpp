#include "grodel/measures.hpp"

namespace grodel {

std::string_view measure_tag(MeasureKind m) {
    switch (m) {
    case MeasureKind::TotalEffectiveResistance:
        return "rr";
    case MeasureKind::ForestIndex:
        return "fi";
    case MeasureKind::TotalHarmonicResistance:
        return "thr";
    }
    return "";
}

std::optional<MeasureKind> measure_from_tag(std::string_view tag) {
    if (tag == "rr")
        return MeasureKind::TotalEffectiveResistance;
    if (tag == "fi")
        return MeasureKind::ForestIndex;
    if (tag == "thr")
        return MeasureKind::TotalHarmonicResistance;
    return std::nullopt;
}

namespace {

// Kahan-compensated accumulator; the pairwise sums reach O(n^2) terms.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double total_effective_resistance(const PseudoinverseState& st) {
    if (st.comps.num_components != 1)
        throw std::invalid_argument(
            "total effective resistance is infinite for disconnected graphs");
    const auto n = static_cast<double>(st.linv.rows());
    return n * st.linv.trace();
}

double total_harmonic_resistance(const PseudoinverseState& st) {
    const auto n = st.linv.rows();
    const auto& lab = st.comps.label;
    CompensatedSum acc;
    for (Eigen::Index v = 1; v < n; ++v) {
        const auto col = st.linv.col(v);
        const double dvv = col(v);
        for (Eigen::Index u = 0; u < v; ++u) {
            if (lab[u] != lab[v])
                continue;
            acc.add(1.0 / (st.linv(u, u) + dvv - 2.0 * col(u)));
        }
    }
    return acc.sum;
}

double forest_distance(const DenseMatrix& omega, NodeId u, NodeId v) {
    if (u == v)
        throw std::invalid_argument("forest distance requires distinct nodes");
    if (u < 0 || v < 0 || u >= omega.rows() || v >= omega.rows())
        throw std::invalid_argument("node id out of range");
    return omega(u, u) - 2.0 * omega(u, v) + omega(v, v);
}

double forest_index(const Graph& g) {
    const auto n = static_cast<double>(g.num_nodes());
    return n * forest_matrix(g).trace() - n;
}

Graph augment_graph(const Graph& g) {
    const NodeId n = g.num_nodes();
    EdgeSet edges = g.edges();
    edges.reserve(edges.size() + n);
    for (NodeId v = 0; v < n; ++v)
        edges.push_back({v, n});
    return Graph(n + 1, std::move(edges));
}

double forest_index_augmented(const PseudoinverseState& st_star, NodeId n) {
    if (st_star.linv.rows() != n + 1)
        throw std::invalid_argument("augmented state dimension must be n + 1");
    const auto nn = static_cast<double>(n);
    return nn * st_star.linv.trace() - (nn + 1.0) * st_star.linv(n, n);
}

}  // namespace grodel
