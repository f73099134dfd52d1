#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "grodel/scoring.hpp"
#include "grodel/solvers.hpp"

namespace grodel {

/// Machine-readable record of a solve run. Serializes to a stable JSON
/// schema; identical inputs produce byte-identical output apart from the
/// timings block.
struct RunReport {
    struct GraphMeta {
        NodeId n = 0;
        std::uint64_t m = 0;
        std::string source;
    };

    GraphMeta graph;
    MeasureKind measure = MeasureKind::TotalHarmonicResistance;
    std::string algorithm;  // "exact" | "greedy" | "greedy-eager"
    int k = 0;
    double initial_value = 0.0;
    std::optional<std::vector<EdgeSet>> solutions;  // exact runs
    std::optional<SolveTrace> trace;                // greedy runs
    std::optional<ScoreAggregate> scores;           // when scoring is requested
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::map<std::string, double> timings_ms;

    friend bool operator==(const RunReport&, const RunReport&);
};

/// Serializes with fields in schema order; edge pairs are emitted canonical
/// (u < v).
std::string to_json(const RunReport& report, int indent = 2);

/// Inverse of to_json. Throws ParseError on malformed input.
RunReport report_from_json(const std::string& text);

}  // namespace grodel
