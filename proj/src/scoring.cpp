#include "grodel/scoring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace grodel {

std::string_view rank_scheme_tag(RankScheme s) {
    switch (s) {
    case RankScheme::Strict:
        return "strict";
    case RankScheme::Fractional:
        return "fractional";
    case RankScheme::Percentile:
        return "percentile";
    }
    return "";
}

std::optional<RankScheme> rank_scheme_from_tag(std::string_view tag) {
    if (tag == "strict")
        return RankScheme::Strict;
    if (tag == "fractional")
        return RankScheme::Fractional;
    if (tag == "percentile")
        return RankScheme::Percentile;
    return std::nullopt;
}

std::vector<double> closeness_centrality(const Graph& g) {
    const NodeId n = g.num_nodes();
    std::vector<double> c(n, 0.0);
    if (n == 1)
        return c;
    std::vector<int> dist(n);
    std::vector<NodeId> frontier;
    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        frontier.assign(1, s);
        long long total = 0;
        int reached = 1;
        while (!frontier.empty()) {
            std::vector<NodeId> next;
            for (NodeId x : frontier) {
                for (NodeId y : g.neighbors(x)) {
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        total += dist[y];
                        ++reached;
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (reached != n)
            throw std::invalid_argument("closeness centrality requires a connected graph");
        c[s] = static_cast<double>(n - 1) / static_cast<double>(total);
    }
    return c;
}

CentralityRanking rank_to_quantile(const std::vector<double>& closeness, RankScheme scheme) {
    const auto n = static_cast<NodeId>(closeness.size());
    if (n < 2)
        throw std::invalid_argument("ranking requires at least two nodes");
    CentralityRanking out;
    out.closeness = closeness;
    out.quantile.assign(n, 0.0);

    if (scheme == RankScheme::Percentile) {
        std::vector<double> sorted = closeness;
        std::sort(sorted.begin(), sorted.end());
        for (NodeId v = 0; v < n; ++v) {
            auto below = std::lower_bound(sorted.begin(), sorted.end(), closeness[v]) -
                         sorted.begin();
            out.quantile[v] = static_cast<double>(below) / static_cast<double>(n);
        }
        return out;
    }

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (closeness[a] != closeness[b])
            return closeness[a] > closeness[b];
        return a < b;
    });
    if (scheme == RankScheme::Strict) {
        for (NodeId i = 0; i < n; ++i)
            out.quantile[order[i]] = static_cast<double>(n - 1 - i) / (n - 1);
        return out;
    }
    // Fractional: each tie group shares the mean of its positions.
    NodeId i = 0;
    while (i < n) {
        NodeId j = i;
        while (j < n && closeness[order[j]] == closeness[order[i]])
            ++j;
        const double mean_pos = 0.5 * (i + j - 1);
        for (NodeId t = i; t < j; ++t)
            out.quantile[order[t]] = (static_cast<double>(n - 1) - mean_pos) / (n - 1);
        i = j;
    }
    return out;
}

double edge_set_score(const CentralityRanking& ranking, const EdgeSet& s) {
    if (s.empty())
        throw std::invalid_argument("cannot score an empty edge set");
    double sum = 0.0;
    for (const auto& e : s)
        sum += 0.5 * (ranking.quantile[e.u] + ranking.quantile[e.v]);
    return sum / static_cast<double>(s.size());
}

ScoreAggregate score_solution_family(const Graph& g, const std::vector<EdgeSet>& solutions,
                                     RankScheme scheme) {
    if (solutions.empty())
        throw std::invalid_argument("cannot score an empty solution family");
    const auto ranking = rank_to_quantile(closeness_centrality(g), scheme);
    ScoreAggregate agg;
    agg.min = std::numeric_limits<double>::infinity();
    agg.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& sol : solutions) {
        const double sc = edge_set_score(ranking, sol);
        agg.min = std::min(agg.min, sc);
        agg.max = std::max(agg.max, sc);
        sum += sc;
    }
    agg.mean = sum / static_cast<double>(solutions.size());
    return agg;
}

}  // namespace grodel
