#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "grodel/graph.hpp"

namespace grodel {

using DenseMatrix = Eigen::MatrixXd;

/// Default absolute tolerance for numeric equality assertions.
inline constexpr double kDefaultTol = 1e-8;

/// Relative eigenvalue cutoff used when pseudo-inverting a Laplacian block:
/// eigenvalues below kEigCutoff * lambda_max are treated as zero.
inline constexpr double kEigCutoff = 1e-10;

/// Laplacian pseudoinverse maintained jointly with the component structure of
/// the graph it belongs to. Cross-component entries are exactly zero; each
/// block satisfies the Moore-Penrose conditions and has zero row/column sums.
///
/// Read-shareable across concurrent loss evaluators; updates go through a
/// single writer between evaluation rounds.
struct PseudoinverseState {
    DenseMatrix linv;
    ComponentMap comps;
};

/// L = D - A. Diagonal holds degrees, off-diagonal -1 per edge; row sums 0.
DenseMatrix laplacian(const Graph& g);

/// Moore-Penrose pseudoinverse of the Laplacian, assembled blockwise per
/// component via dense symmetric eigendecomposition. Singleton components
/// yield 1x1 zero blocks.
PseudoinverseState pseudoinverse(const Graph& g);

/// Forest matrix (L + I)^{-1}, computed by dense SPD factorization.
DenseMatrix forest_matrix(const Graph& g);

/// Quadratic form linv[u,u] - 2 linv[u,v] + linv[v,v] for nodes in the same
/// component; +infinity for disconnected pairs. Throws if u == v.
double effective_resistance(const PseudoinverseState& st, NodeId u, NodeId v);

/// Rank-one downdate of the pseudoinverse after deleting the non-bridge edge
/// (a,b):  linv' = linv + (linv e_ab)(linv e_ab)^T / (1 - r(a,b)).
/// The component map is unchanged. Throws if |1 - r(a,b)| < tol, which marks
/// a bridge; use bridge_split_update instead.
PseudoinverseState sherman_morrison_downdate(const PseudoinverseState& st, NodeId a, NodeId b,
                                             double tol = kDefaultTol);

/// Update after deleting the bridge (a,b): the component map is recomputed on
/// g_after, the two new blocks are pseudo-inverted from scratch, and all other
/// blocks are copied unchanged. Throws if a and b are still connected.
PseudoinverseState bridge_split_update(const PseudoinverseState& st, const Graph& g_after,
                                       NodeId a, NodeId b);

/// Debug dump: one row per line, space-separated, 17 significant digits.
void dump_matrix(const DenseMatrix& m, std::ostream& out);

}  // namespace grodel
