#include "grodel/spectral.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace grodel {

DenseMatrix laplacian(const Graph& g) {
    const NodeId n = g.num_nodes();
    DenseMatrix L = DenseMatrix::Zero(n, n);
    for (const auto& e : g.edges()) {
        L(e.u, e.u) += 1.0;
        L(e.v, e.v) += 1.0;
        L(e.u, e.v) -= 1.0;
        L(e.v, e.u) -= 1.0;
    }
    return L;
}

namespace {

// Pseudo-inverts the Laplacian block induced by `nodes` on g and scatters it
// into linv. The block's rows/columns in linv are overwritten entirely.
void fill_block_pseudoinverse(DenseMatrix& linv, const Graph& g, const std::vector<NodeId>& nodes) {
    const auto c = static_cast<Eigen::Index>(nodes.size());
    if (c == 1) {
        linv(nodes[0], nodes[0]) = 0.0;
        return;
    }
    std::vector<NodeId> local(g.num_nodes(), -1);
    for (Eigen::Index i = 0; i < c; ++i)
        local[nodes[i]] = static_cast<NodeId>(i);
    DenseMatrix block = DenseMatrix::Zero(c, c);
    for (Eigen::Index i = 0; i < c; ++i) {
        for (NodeId y : g.neighbors(nodes[i])) {
            block(i, i) += 1.0;
            block(i, local[y]) -= 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(block);
    const auto& w = es.eigenvalues();
    const double cutoff = kEigCutoff * std::max(w(c - 1), 0.0);
    Eigen::VectorXd winv = Eigen::VectorXd::Zero(c);
    for (Eigen::Index i = 0; i < c; ++i)
        if (w(i) > cutoff)
            winv(i) = 1.0 / w(i);
    DenseMatrix inv = es.eigenvectors() * winv.asDiagonal() * es.eigenvectors().transpose();
    inv = ((inv + inv.transpose()) * 0.5).eval();  // symmetric storage, exactly
    for (Eigen::Index i = 0; i < c; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            linv(nodes[i], nodes[j]) = inv(i, j);
}

std::vector<std::vector<NodeId>> nodes_by_component(const ComponentMap& cm) {
    std::vector<std::vector<NodeId>> out(cm.num_components);
    for (int c = 0; c < cm.num_components; ++c)
        out[c].reserve(cm.sizes[c]);
    for (NodeId v = 0; v < static_cast<NodeId>(cm.label.size()); ++v)
        out[cm.label[v]].push_back(v);
    return out;
}

}  // namespace

PseudoinverseState pseudoinverse(const Graph& g) {
    PseudoinverseState st;
    st.comps = connected_components(g);
    st.linv = DenseMatrix::Zero(g.num_nodes(), g.num_nodes());
    for (const auto& nodes : nodes_by_component(st.comps))
        fill_block_pseudoinverse(st.linv, g, nodes);
    return st;
}

DenseMatrix forest_matrix(const Graph& g) {
    const NodeId n = g.num_nodes();
    DenseMatrix a = laplacian(g);
    a.diagonal().array() += 1.0;
    return a.llt().solve(DenseMatrix::Identity(n, n));
}

double effective_resistance(const PseudoinverseState& st, NodeId u, NodeId v) {
    if (u == v)
        throw std::invalid_argument("effective resistance requires distinct nodes");
    if (u < 0 || v < 0 || u >= st.linv.rows() || v >= st.linv.rows())
        throw std::invalid_argument("node id out of range");
    if (st.comps.label[u] != st.comps.label[v])
        return std::numeric_limits<double>::infinity();
    return st.linv(u, u) - 2.0 * st.linv(u, v) + st.linv(v, v);
}

PseudoinverseState sherman_morrison_downdate(const PseudoinverseState& st, NodeId a, NodeId b,
                                             double tol) {
    if (a == b || a < 0 || b < 0 || a >= st.linv.rows() || b >= st.linv.rows())
        throw std::invalid_argument("invalid edge endpoints");
    Eigen::VectorXd w = st.linv.col(a) - st.linv.col(b);
    const double denom = 1.0 - (w(a) - w(b));  // 1 - r(a,b)
    if (std::abs(denom) < tol)
        throw std::invalid_argument(
            "edge is a bridge (resistance 1); use bridge_split_update");
    PseudoinverseState out;
    out.comps = st.comps;
    out.linv = st.linv + (w * w.transpose()) / denom;
    return out;
}

PseudoinverseState bridge_split_update(const PseudoinverseState& st, const Graph& g_after,
                                       NodeId a, NodeId b) {
    PseudoinverseState out;
    out.comps = connected_components(g_after);
    if (out.comps.label[a] == out.comps.label[b])
        throw std::invalid_argument("nodes still connected; the removed edge was not a bridge");
    out.linv = st.linv;
    // The old block containing (a,b) is the touched region; everything else
    // is reused verbatim.
    const int old_block = st.comps.label[a];
    std::vector<NodeId> touched;
    for (NodeId v = 0; v < static_cast<NodeId>(st.comps.label.size()); ++v)
        if (st.comps.label[v] == old_block)
            touched.push_back(v);
    for (NodeId i : touched)
        for (NodeId j : touched)
            out.linv(i, j) = 0.0;
    std::vector<NodeId> side_a, side_b;
    for (NodeId v : touched)
        (out.comps.label[v] == out.comps.label[a] ? side_a : side_b).push_back(v);
    fill_block_pseudoinverse(out.linv, g_after, side_a);
    fill_block_pseudoinverse(out.linv, g_after, side_b);
    return out;
}

void dump_matrix(const DenseMatrix& m, std::ostream& out) {
    out.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

}  // namespace grodel
