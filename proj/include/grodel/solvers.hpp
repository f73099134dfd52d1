#pragma once

#include <cstdint>

#include "grodel/measures.hpp"

namespace grodel {

/// Enumeration guard for the exhaustive solver: C(m,k) must not exceed this.
inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

/// Tie tolerance under which two candidate objective values count as equal
/// when collecting the full optimum family.
inline constexpr double kDefaultTieTol = 1e-9;

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Record of one solver run. `picked` is in selection order; for the
/// harmonic measure value_after is non-increasing, for the forest index
/// non-decreasing, and loss[r] == |value_after[r] - value_after[r-1]|.
struct SolveTrace {
    MeasureKind measure = MeasureKind::TotalHarmonicResistance;
    int k = 0;
    std::vector<Edge> picked;
    std::vector<double> value_after;
    std::vector<double> loss;
    double initial_value = 0.0;
    bool exhausted = false;  // fewer than k edges could be selected
};

struct ExactResult {
    MeasureKind measure = MeasureKind::TotalHarmonicResistance;
    int k = 0;
    double initial_value = 0.0;
    double optimal_value = 0.0;
    /// Every optimal k-subset within the tie tolerance, each canonical,
    /// sorted lexicographically.
    std::vector<EdgeSet> solutions;
};

/// Exhaustive deletion solver: enumerates all k-subsets of edges, evaluating
/// each deleted graph from scratch (minimizes THR, maximizes FI). Intended as
/// the independence oracle for the greedy solvers. Throws BudgetError if
/// C(m,k) exceeds `budget` and std::invalid_argument if k > m or the measure
/// has no deletion objective (rr).
ExactResult exact_solve(const Graph& g, int k, MeasureKind measure, int threads = 1,
                        std::uint64_t budget = kDefaultEnumBudget,
                        double tie_tol = kDefaultTieTol);

/// Marginal harmonic-resistance loss of deleting e from g: R_h(G) - R_h(G').
/// Builds the candidate pseudoinverse via the rank-one downdate (non-bridge)
/// or the bridge split, then takes the pairwise difference; always >= 0.
double thr_loss(const PseudoinverseState& st, const Graph& g, Edge e);

/// Hot-path variant with the bridge set of g and R_h(G) precomputed.
double thr_loss(const PseudoinverseState& st, const Graph& g, Edge e, const EdgeSet& bridges,
                double rh_before);

/// Marginal forest-index loss of deleting original edge (a,b), computed in
/// O(n) from the augmented graph's pseudoinverse:
///   n/(1-r*) * |linv*[:,a] - linv*[:,b]|^2 - (n+1)/(1-r*) * (linv*[n,a] - linv*[n,b])^2
/// where r* is the effective resistance of (a,b) in the augmented graph
/// (always < 1: the universal vertex provides a second path). Throws if a or
/// b is the universal vertex.
double fi_loss(const PseudoinverseState& st_star, NodeId a, NodeId b, NodeId n);

/// Lazily evaluated queue entry; entries whose round_stamp is older than the
/// current round must be re-evaluated before they can be accepted.
struct LazyQueueEntry {
    Edge edge;
    double cached_loss = 0.0;
    int round_stamp = 0;
};

/// Greedy deletion solver: each round deletes the edge of maximal marginal loss,
/// re-evaluating only stale top candidates (lazy evaluation). Ties break to
/// the lexicographically smallest edge. State is maintained incrementally:
/// rank-one downdate / bridge split for THR, augmented-graph downdate for FI.
SolveTrace greedy_solve(const Graph& g, int k, MeasureKind measure, int threads = 1);

/// Reference greedy that re-evaluates every remaining edge in every round;
/// correctness oracle for the lazy queue.
SolveTrace eager_greedy_solve(const Graph& g, int k, MeasureKind measure, int threads = 1);

}  // namespace grodel
