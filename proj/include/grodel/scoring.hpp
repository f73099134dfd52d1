#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "grodel/graph.hpp"

namespace grodel {

/// How tied closeness values map to rank quantiles.
enum class RankScheme {
    /// Strict total order (ties broken by ascending node id);
    /// quantile = (n-1-position)/(n-1). Top node scores 1, bottom 0.
    Strict,
    /// Tied nodes share the mean of their positions.
    Fractional,
    /// quantile = |{u : c(u) < c(v)}| / n — the fraction of strictly less
    /// central nodes. All tied nodes share a value; the least central group
    /// scores 0, a unique top node scores (n-1)/n.
    Percentile,
};

std::string_view rank_scheme_tag(RankScheme s);  // "strict" | "fractional" | "percentile"
std::optional<RankScheme> rank_scheme_from_tag(std::string_view tag);

struct CentralityRanking {
    std::vector<double> closeness;
    std::vector<double> quantile;
};

/// c(v) = (n-1) / sum of unweighted shortest-path distances from v.
/// Throws for disconnected graphs.
std::vector<double> closeness_centrality(const Graph& g);

/// Ranks nodes by descending closeness and converts positions to quantile
/// scores per the chosen scheme. Requires n >= 2.
CentralityRanking rank_to_quantile(const std::vector<double>& closeness,
                                   RankScheme scheme = RankScheme::Strict);

/// Mean over the edges of the mean quantile of their endpoints.
/// Throws for an empty set.
double edge_set_score(const CentralityRanking& ranking, const EdgeSet& s);

struct ScoreAggregate {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

/// Scores each solution on the original graph's ranking and aggregates.
/// Values are full precision; presentation rounds to 2 decimals.
ScoreAggregate score_solution_family(const Graph& g, const std::vector<EdgeSet>& solutions,
                                     RankScheme scheme = RankScheme::Strict);

}  // namespace grodel
