#include "grodel/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <thread>
#include <utility>

namespace grodel {

namespace {

// --- enumeration helpers ------------------------------------------------

// C(n,k), throwing BudgetError as soon as the running value exceeds cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: r holds C(n-k+i, i) after each step
        if (r > cap)
            throw BudgetError("enumeration budget exceeded: C(m,k) > " + std::to_string(cap));
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

// Lexicographic unranking (combinatorial number system).
std::vector<int> unrank_combination(std::uint64_t rank, int m, int k) {
    std::vector<int> comb(k);
    int c = 0;
    for (int j = 0; j < k; ++j) {
        while (true) {
            std::uint64_t count = binomial(m - c - 1, k - j - 1);
            if (rank < count) {
                comb[j] = c++;
                break;
            }
            rank -= count;
            ++c;
        }
    }
    return comb;
}

bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < m - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void run_chunked(std::uint64_t total, int threads, const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
    threads = std::max(1, threads);
    if (threads == 1 || total < 2) {
        body(0, 0, total);
        return;
    }
    const auto t = std::min<std::uint64_t>(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (std::uint64_t i = 0; i < t; ++i) {
        std::uint64_t lo = total * i / t;
        std::uint64_t hi = total * (i + 1) / t;
        pool.emplace_back([&body, i, lo, hi] { body(static_cast<int>(i), lo, hi); });
    }
    for (auto& th : pool)
        th.join();
}

double evaluate_from_scratch(const Graph& g, MeasureKind measure) {
    if (measure == MeasureKind::ForestIndex)
        return forest_index(g);
    return total_harmonic_resistance(pseudoinverse(g));
}

void require_deletion_objective(MeasureKind measure) {
    if (measure != MeasureKind::ForestIndex && measure != MeasureKind::TotalHarmonicResistance)
        throw std::invalid_argument(
            "deletion solvers support the harmonic resistance and forest index measures only");
}

}  // namespace

ExactResult exact_solve(const Graph& g, int k, MeasureKind measure, int threads,
                        std::uint64_t budget, double tie_tol) {
    require_deletion_objective(measure);
    const int m = static_cast<int>(g.num_edges());
    if (k < 0 || k > m)
        throw std::invalid_argument("k must be in [0, m]");
    const std::uint64_t total = binomial_capped(m, k, budget);

    const bool minimize = measure == MeasureKind::TotalHarmonicResistance;
    const double sign = minimize ? 1.0 : -1.0;  // comparisons below minimize sign*value

    struct Candidate {
        double value;
        std::vector<int> subset;
    };
    struct ChunkResult {
        double best = std::numeric_limits<double>::infinity();
        std::vector<Candidate> near_best;
    };

    std::vector<ChunkResult> chunks(std::max(1, threads));
    run_chunked(total, threads, [&](int chunk, std::uint64_t lo, std::uint64_t hi) {
        auto& out = chunks[chunk];
        if (lo >= hi)
            return;
        std::vector<int> comb = unrank_combination(lo, m, k);
        EdgeSet kept;
        kept.reserve(m - k);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            kept.clear();
            int next = 0;
            for (int i = 0; i < m; ++i) {
                if (next < k && comb[next] == i)
                    ++next;
                else
                    kept.push_back(g.edges()[i]);
            }
            const double value =
                sign * evaluate_from_scratch(Graph(g.num_nodes(), kept), measure);
            if (value < out.best + tie_tol) {
                if (value < out.best) {
                    out.best = value;
                    std::erase_if(out.near_best,
                                  [&](const Candidate& c) { return c.value > out.best + tie_tol; });
                }
                out.near_best.push_back({value, comb});
            }
            if (idx + 1 < hi)
                next_combination(comb, m);
        }
    });

    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : chunks)
        best = std::min(best, c.best);

    ExactResult res;
    res.measure = measure;
    res.k = k;
    res.initial_value = evaluate_from_scratch(g, measure);
    res.optimal_value = sign * best;
    for (const auto& c : chunks) {
        for (const auto& cand : c.near_best) {
            if (cand.value > best + tie_tol)
                continue;
            EdgeSet sol;
            sol.reserve(k);
            for (int i : cand.subset)
                sol.push_back(g.edges()[i]);
            res.solutions.push_back(std::move(sol));
        }
    }
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

double thr_loss(const PseudoinverseState& st, const Graph& g, Edge e) {
    return thr_loss(st, g, e, find_bridges(g), total_harmonic_resistance(st));
}

double thr_loss(const PseudoinverseState& st, const Graph& g, Edge e, const EdgeSet& bridges,
                double rh_before) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e))
        throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) + ") not in graph");
    PseudoinverseState after =
        std::binary_search(bridges.begin(), bridges.end(), e)
            ? bridge_split_update(st, remove_edge(g, e), e.u, e.v)
            : sherman_morrison_downdate(st, e.u, e.v);
    return rh_before - total_harmonic_resistance(after);
}

double fi_loss(const PseudoinverseState& st_star, NodeId a, NodeId b, NodeId n) {
    if (a == b)
        throw std::invalid_argument("loss requires distinct nodes");
    if (a >= n || b >= n || a < 0 || b < 0)
        throw std::invalid_argument("edge may not touch the universal vertex");
    const auto& L = st_star.linv;
    Eigen::VectorXd w = L.col(a) - L.col(b);
    const double denom = 1.0 - (w(a) - w(b));
    if (denom < 1e-6)
        throw std::logic_error("augmented resistance unexpectedly close to 1");
    const double ustar_diff = L(n, a) - L(n, b);
    return static_cast<double>(n) / denom * w.squaredNorm() -
           static_cast<double>(n + 1) / denom * ustar_diff * ustar_diff;
}

namespace {

// Shared round machinery for both measures. The measure-specific parts are
// the loss of a candidate edge against the frozen state, and the state/value
// update once an edge is selected.
struct ThrContext {
    Graph g;
    PseudoinverseState st;
    EdgeSet bridges;
    double value;

    explicit ThrContext(const Graph& graph)
        : g(graph), st(pseudoinverse(g)), bridges(find_bridges(g)),
          value(total_harmonic_resistance(st)) {}

    const EdgeSet& candidates() const { return g.edges(); }
    double loss(Edge e) const { return thr_loss(st, g, e, bridges, value); }
    void apply(Edge e) {
        const bool is_bridge = std::binary_search(bridges.begin(), bridges.end(), e);
        Graph after = remove_edge(g, e);
        st = is_bridge ? bridge_split_update(st, after, e.u, e.v)
                       : sherman_morrison_downdate(st, e.u, e.v);
        g = std::move(after);
        bridges = find_bridges(g);
        value = total_harmonic_resistance(st);
    }
};

struct FiContext {
    Graph g;
    NodeId n;
    PseudoinverseState st_star;
    double value;

    explicit FiContext(const Graph& graph)
        : g(graph), n(graph.num_nodes()), st_star(pseudoinverse(augment_graph(graph))),
          value(forest_index_augmented(st_star, n)) {}

    const EdgeSet& candidates() const { return g.edges(); }
    double loss(Edge e) const { return fi_loss(st_star, e.u, e.v, n); }
    void apply(Edge e) {
        // Deleting an original edge is never a bridge deletion in the
        // augmented graph; the universal vertex keeps it connected.
        st_star = sherman_morrison_downdate(st_star, e.u, e.v);
        g = remove_edge(g, e);
        value = forest_index_augmented(st_star, n);
    }
};

template <typename Context>
std::vector<double> evaluate_all(const Context& ctx, int threads) {
    const auto& edges = ctx.candidates();
    std::vector<double> losses(edges.size());
    run_chunked(edges.size(), threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
            losses[i] = ctx.loss(edges[i]);
    });
    return losses;
}

// Max-heap ordering: larger loss first, smaller edge on equal loss.
struct QueueOrder {
    bool operator()(const LazyQueueEntry& x, const LazyQueueEntry& y) const {
        if (x.cached_loss != y.cached_loss)
            return x.cached_loss < y.cached_loss;
        return y.edge < x.edge;
    }
};

template <typename Context>
SolveTrace run_greedy(const Graph& g, int k, MeasureKind measure, int threads, bool lazy) {
    if (k < 0 || std::cmp_greater(k, g.num_edges()))
        throw std::invalid_argument("k must be in [0, m]");

    Context ctx(g);
    SolveTrace tr;
    tr.measure = measure;
    tr.k = k;
    tr.initial_value = ctx.value;
    if (k == 0)
        return tr;

    std::priority_queue<LazyQueueEntry, std::vector<LazyQueueEntry>, QueueOrder> queue;
    if (lazy) {
        auto losses = evaluate_all(ctx, threads);
        for (std::size_t i = 0; i < losses.size(); ++i)
            queue.push({ctx.candidates()[i], losses[i], 0});
    }

    for (int round = 0; round < k; ++round) {
        Edge chosen{};
        double chosen_loss = 0.0;
        if (lazy) {
            while (true) {
                LazyQueueEntry top = queue.top();
                queue.pop();
                if (!ctx.g.has_edge(top.edge))
                    continue;  // deleted in an earlier round
                if (top.round_stamp == round) {
                    chosen = top.edge;
                    chosen_loss = top.cached_loss;
                    break;
                }
                top.cached_loss = ctx.loss(top.edge);
                top.round_stamp = round;
                queue.push(top);
            }
        } else {
            auto losses = evaluate_all(ctx, threads);
            std::size_t best = 0;
            for (std::size_t i = 1; i < losses.size(); ++i)
                if (losses[i] > losses[best])
                    best = i;  // equal losses keep the smaller (earlier) edge
            chosen = ctx.candidates()[best];
            chosen_loss = losses[best];
        }
        ctx.apply(chosen);
        tr.picked.push_back(chosen);
        tr.loss.push_back(chosen_loss);
        tr.value_after.push_back(ctx.value);
    }
    return tr;
}

SolveTrace dispatch_greedy(const Graph& g, int k, MeasureKind measure, int threads, bool lazy) {
    require_deletion_objective(measure);
    if (measure == MeasureKind::TotalHarmonicResistance)
        return run_greedy<ThrContext>(g, k, measure, threads, lazy);
    return run_greedy<FiContext>(g, k, measure, threads, lazy);
}

}  // namespace

SolveTrace greedy_solve(const Graph& g, int k, MeasureKind measure, int threads) {
    return dispatch_greedy(g, k, measure, threads, /*lazy=*/true);
}

SolveTrace eager_greedy_solve(const Graph& g, int k, MeasureKind measure, int threads) {
    return dispatch_greedy(g, k, measure, threads, /*lazy=*/false);
}

}  // namespace grodel
