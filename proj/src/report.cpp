#include "grodel/report.hpp"

#include <cmath>

#include <json.hpp>

namespace grodel {

namespace {

using Json = nlohmann::ordered_json;

Json edges_to_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const auto& e : edges)
        arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

std::vector<Edge> edges_from_json(const Json& arr) {
    std::vector<Edge> out;
    for (const auto& item : arr)
        out.push_back({item.at(0).get<NodeId>(), item.at(1).get<NodeId>()});
    return out;
}

}  // namespace

bool operator==(const RunReport& a, const RunReport& b) {
    auto trace_eq = [](const SolveTrace& x, const SolveTrace& y) {
        return x.measure == y.measure && x.k == y.k && x.picked == y.picked &&
               x.value_after == y.value_after && x.loss == y.loss &&
               x.initial_value == y.initial_value && x.exhausted == y.exhausted;
    };
    auto scores_eq = [](const ScoreAggregate& x, const ScoreAggregate& y) {
        return x.min == y.min && x.mean == y.mean && x.max == y.max;
    };
    if (a.graph.n != b.graph.n || a.graph.m != b.graph.m || a.graph.source != b.graph.source)
        return false;
    if (a.measure != b.measure || a.algorithm != b.algorithm || a.k != b.k ||
        a.initial_value != b.initial_value || a.seed != b.seed || a.tol != b.tol)
        return false;
    if (a.solutions != b.solutions)
        return false;
    if (a.trace.has_value() != b.trace.has_value() ||
        (a.trace && !trace_eq(*a.trace, *b.trace)))
        return false;
    if (a.scores.has_value() != b.scores.has_value() ||
        (a.scores && !scores_eq(*a.scores, *b.scores)))
        return false;
    return a.timings_ms == b.timings_ms;
}

std::string to_json(const RunReport& r, int indent) {
    Json j;
    j["graph"] = Json{{"n", r.graph.n}, {"m", r.graph.m}, {"source", r.graph.source}};
    j["measure"] = std::string(measure_tag(r.measure));
    j["algorithm"] = r.algorithm;
    j["k"] = r.k;
    j["initial_value"] = r.initial_value;
    if (r.solutions) {
        Json arr = Json::array();
        for (const auto& sol : *r.solutions)
            arr.push_back(edges_to_json(sol));
        j["solutions"] = arr;
    }
    if (r.trace) {
        j["trace"] = Json{{"picked", edges_to_json(r.trace->picked)},
                          {"value_after", r.trace->value_after},
                          {"loss", r.trace->loss}};
    }
    if (r.scores) {
        j["scores"] = Json{{"min", r.scores->min},
                           {"mean", r.scores->mean},
                           {"max", r.scores->max}};
    }
    j["seed"] = r.seed;
    j["tol"] = r.tol;
    Json timings = Json::object();
    for (const auto& [name, ms] : r.timings_ms)
        timings[name] = ms;
    j["timings_ms"] = timings;
    return j.dump(indent);
}

RunReport report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
    try {
        RunReport r;
        const auto& g = j.at("graph");
        r.graph.n = g.at("n").get<NodeId>();
        r.graph.m = g.at("m").get<std::uint64_t>();
        r.graph.source = g.at("source").get<std::string>();
        auto measure = measure_from_tag(j.at("measure").get<std::string>());
        if (!measure)
            throw ParseError("unknown measure tag in report");
        r.measure = *measure;
        r.algorithm = j.at("algorithm").get<std::string>();
        r.k = j.at("k").get<int>();
        r.initial_value = j.at("initial_value").get<double>();
        if (j.contains("solutions")) {
            std::vector<EdgeSet> sols;
            for (const auto& s : j["solutions"])
                sols.push_back(edges_from_json(s));
            r.solutions = std::move(sols);
        }
        if (j.contains("trace")) {
            SolveTrace t;
            t.measure = r.measure;
            t.k = r.k;
            t.initial_value = r.initial_value;
            t.picked = edges_from_json(j["trace"].at("picked"));
            t.value_after = j["trace"].at("value_after").get<std::vector<double>>();
            t.loss = j["trace"].at("loss").get<std::vector<double>>();
            r.trace = std::move(t);
        }
        if (j.contains("scores")) {
            ScoreAggregate s;
            s.min = j["scores"].at("min").get<double>();
            s.mean = j["scores"].at("mean").get<double>();
            s.max = j["scores"].at("max").get<double>();
            r.scores = s;
        }
        r.seed = j.at("seed").get<std::uint64_t>();
        r.tol = j.at("tol").get<double>();
        if (j.contains("timings_ms"))
            for (const auto& [name, ms] : j["timings_ms"].items())
                r.timings_ms[name] = ms.get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report JSON missing fields: ") + e.what());
    }
}

}  // namespace grodel
