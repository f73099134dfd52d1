#include "grodel/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grodel/generators.hpp"
#include "grodel/report.hpp"

namespace grodel {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double round2(double x) {
    return std::round(x * 100.0) / 100.0;
}

class PhaseTimer {
public:
    explicit PhaseTimer(std::map<std::string, double>& sink) : sink_(sink) {}
    template <typename F>
    auto time(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(name, start);
        } else {
            auto result = f();
            record(name, start);
            return result;
        }
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point start) {
        const auto end = std::chrono::steady_clock::now();
        sink_[name] = std::chrono::duration<double, std::milli>(end - start).count();
    }
    std::map<std::string, double>& sink_;
};

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line);
    }
}

EdgeSet load_edge_set(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge file: " + path);
    EdgeSet edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#' || line[pos] == '%')
            continue;
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u >> v) || u < 0 || v < 0 || u == v)
            throw ParseError(path + ": malformed edge at line " + std::to_string(lineno), lineno);
        edges.push_back(make_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

// Applies the largest-connected-component preprocessing and remaps the given
// edge sets into the reduced id space. An edge outside the kept component is
// an input error.
Graph preprocess(const Graph& g, bool use_lcc, std::vector<EdgeSet*> edge_sets = {}) {
    if (!use_lcc)
        return g;
    auto lcc = largest_connected_component(g);
    for (EdgeSet* s : edge_sets) {
        for (auto& e : *s) {
            if (e.u >= g.num_nodes() || e.v >= g.num_nodes())
                throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) + ") not in graph");
            NodeId u = lcc.old_to_new[e.u];
            NodeId v = lcc.old_to_new[e.v];
            if (u < 0 || v < 0)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                            std::to_string(e.v) +
                                            ") lies outside the largest component");
            e = make_edge(u, v);
        }
        std::sort(s->begin(), s->end());
    }
    return std::move(lcc.graph);
}

void require_edges_present(const Graph& g, const EdgeSet& s) {
    for (const auto& e : s)
        if (!g.has_edge(e))
            throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ") not in graph");
}

std::string format_value(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

int resolve_threads(int threads) {
    if (threads > 0)
        return threads;
    if (const char* env = std::getenv("GRODEL_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    return 1;
}

// --- subcommand option blocks --------------------------------------------

struct GenerateOpts {
    std::string family;
    int rows = 0, cols = 0, n = 0, deg = 0, attach = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct MeasureOpts {
    std::string input;
    std::string measure;
    bool no_lcc = false;
    std::string out_path;
};

struct SolveOpts {
    std::string input;
    std::string measure;
    std::string algo = "greedy";
    int k = 20;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    double tie_tol = kDefaultTieTol;
    std::uint64_t budget = kDefaultEnumBudget;
    bool score = false;
    std::string rank_scheme = "percentile";
    int threads = 0;
    bool no_lcc = false;
    std::string out_path;
};

struct ScoreOpts {
    std::string input;
    std::string edges_path;
    std::string rank_scheme = "strict";
    bool no_lcc = false;
};

struct ExportDotOpts {
    std::string input;
    std::string edges_path;
    std::string out_path;
    bool no_lcc = false;
};

int cmd_generate(const GenerateOpts& opt, std::ostream& out) {
    Graph g;
    if (opt.family == "grid")
        g = grid_graph(opt.rows, opt.cols);
    else if (opt.family == "hotdog")
        g = hotdog_graph(opt.rows, opt.cols);
    else if (opt.family == "ba")
        g = barabasi_albert_graph(opt.attach, opt.n, opt.seed);
    else if (opt.family == "ws")
        g = watts_strogatz_graph(opt.n, opt.deg, opt.p, opt.seed);
    std::ostringstream body;
    write_edge_list(g, body);
    write_output(opt.out_path, body.str(), out);
    return kExitOk;
}

int cmd_measure(const MeasureOpts& opt, std::ostream& out) {
    const auto measure = measure_from_tag(opt.measure);
    if (!measure)
        throw UsageError("unknown measure: " + opt.measure);
    std::map<std::string, double> timings;
    PhaseTimer timer(timings);
    Graph raw = timer.time("load", [&] { return load_graph(opt.input); });
    Graph g = timer.time("preprocess", [&] { return preprocess(raw, !opt.no_lcc); });
    const double value = timer.time("measure", [&] {
        switch (*measure) {
        case MeasureKind::ForestIndex:
            return forest_index(g);
        case MeasureKind::TotalEffectiveResistance:
            return total_effective_resistance(pseudoinverse(g));
        case MeasureKind::TotalHarmonicResistance:
            return total_harmonic_resistance(pseudoinverse(g));
        }
        throw UsageError("unknown measure");
    });
    out << format_value(value) << '\n';
    if (!opt.out_path.empty()) {
        nlohmann::ordered_json j;
        j["graph"] = {{"n", g.num_nodes()}, {"m", g.num_edges()}, {"source", opt.input}};
        j["measure"] = std::string(measure_tag(*measure));
        j["value"] = value;
        nlohmann::ordered_json jt = nlohmann::ordered_json::object();
        for (const auto& [name, ms] : timings)
            jt[name] = ms;
        j["timings_ms"] = jt;
        write_output(opt.out_path, j.dump(2) + "\n", out);
    }
    return kExitOk;
}

int cmd_solve(const SolveOpts& opt, std::ostream& out) {
    const auto measure = measure_from_tag(opt.measure);
    if (!measure)
        throw UsageError("unknown measure: " + opt.measure);
    if (*measure == MeasureKind::TotalEffectiveResistance)
        throw UsageError("solve supports --measure thr or fi");
    if (opt.algo != "exact" && opt.algo != "greedy" && opt.algo != "greedy-eager")
        throw UsageError("unknown algorithm: " + opt.algo);
    const auto scheme = rank_scheme_from_tag(opt.rank_scheme);
    if (!scheme)
        throw UsageError("unknown rank scheme: " + opt.rank_scheme);
    const int threads = resolve_threads(opt.threads);

    RunReport report;
    PhaseTimer timer(report.timings_ms);
    Graph raw = timer.time("load", [&] { return load_graph(opt.input); });
    Graph g = timer.time("preprocess", [&] { return preprocess(raw, !opt.no_lcc); });
    report.graph = {g.num_nodes(), g.num_edges(), opt.input};
    report.measure = *measure;
    report.algorithm = opt.algo;
    report.k = opt.k;
    report.seed = opt.seed;
    report.tol = opt.tol;

    std::vector<EdgeSet> family;  // sets to score
    if (opt.algo == "exact") {
        auto result = timer.time("solve", [&] {
            return exact_solve(g, opt.k, *measure, threads, opt.budget, opt.tie_tol);
        });
        report.initial_value = result.initial_value;
        family = result.solutions;
        report.solutions = std::move(result.solutions);
    } else {
        auto trace = timer.time("solve", [&] {
            return opt.algo == "greedy" ? greedy_solve(g, opt.k, *measure, threads)
                                        : eager_greedy_solve(g, opt.k, *measure, threads);
        });
        report.initial_value = trace.initial_value;
        if (!trace.picked.empty()) {
            EdgeSet sol = trace.picked;
            std::sort(sol.begin(), sol.end());
            family.push_back(std::move(sol));
        }
        report.trace = std::move(trace);
    }
    if (opt.score && !family.empty()) {
        auto agg = timer.time("score",
                              [&] { return score_solution_family(g, family, *scheme); });
        report.scores = ScoreAggregate{round2(agg.min), round2(agg.mean), round2(agg.max)};
    }
    write_output(opt.out_path, to_json(report) + "\n", out);
    return kExitOk;
}

int cmd_score(const ScoreOpts& opt, std::ostream& out) {
    const auto scheme = rank_scheme_from_tag(opt.rank_scheme);
    if (!scheme)
        throw UsageError("unknown rank scheme: " + opt.rank_scheme);
    Graph raw = load_graph(opt.input);
    EdgeSet edges = load_edge_set(opt.edges_path);
    Graph g = preprocess(raw, !opt.no_lcc, {&edges});
    require_edges_present(g, edges);
    const auto agg = score_solution_family(g, {edges}, *scheme);
    out << format_value(agg.min) << ' ' << format_value(agg.mean) << ' '
        << format_value(agg.max) << '\n';
    return kExitOk;
}

int cmd_export_dot(const ExportDotOpts& opt, std::ostream& out) {
    Graph raw = load_graph(opt.input);
    EdgeSet highlight;
    if (!opt.edges_path.empty())
        highlight = load_edge_set(opt.edges_path);
    Graph g = preprocess(raw, !opt.no_lcc, {&highlight});
    require_edges_present(g, highlight);
    std::ostringstream dot;
    dot << "graph G {\n  node [shape=circle];\n";
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        dot << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        dot << "  " << e.u << " -- " << e.v;
        if (std::binary_search(highlight.begin(), highlight.end(), e))
            dot << " [color=red, penwidth=3]";
        dot << ";\n";
    }
    dot << "}\n";
    write_output(opt.out_path, dot.str(), out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-edge deletion robustness toolkit"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* generate = app.add_subcommand("generate", "write a generated graph as an edge list");
    generate->require_subcommand(1);
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", gen.out_path, "output path (default: stdout)");
    };
    auto* gen_grid = generate->add_subcommand("grid", "rows x cols lattice");
    gen_grid->add_option("--rows", gen.rows)->required();
    gen_grid->add_option("--cols", gen.cols)->required();
    add_out(gen_grid);
    auto* gen_hotdog = generate->add_subcommand("hotdog", "lattice with two pendant nodes");
    gen_hotdog->add_option("--rows", gen.rows)->required();
    gen_hotdog->add_option("--cols", gen.cols)->required();
    add_out(gen_hotdog);
    auto* gen_ba = generate->add_subcommand("ba", "preferential attachment graph");
    gen_ba->add_option("--k", gen.attach, "edges per new node")->required();
    gen_ba->add_option("--n", gen.n, "node count")->required();
    gen_ba->add_option("--seed", gen.seed);
    add_out(gen_ba);
    auto* gen_ws = generate->add_subcommand("ws", "rewired ring lattice");
    gen_ws->add_option("--n", gen.n, "node count")->required();
    gen_ws->add_option("--deg", gen.deg, "lattice neighbors per side")->required();
    gen_ws->add_option("--p", gen.p, "rewiring probability")->required();
    gen_ws->add_option("--seed", gen.seed);
    add_out(gen_ws);

    MeasureOpts meas;
    auto* measure = app.add_subcommand("measure", "evaluate a robustness measure");
    measure->add_option("input", meas.input, "edge list path")->required();
    measure->add_option("--measure", meas.measure, "thr | fi | rr")->required();
    measure->add_flag("--no-lcc", meas.no_lcc, "skip largest-component preprocessing");
    measure->add_option("--out", meas.out_path, "also write a JSON report");

    SolveOpts sol;
    auto* solve = app.add_subcommand("solve", "select k edges to delete");
    solve->add_option("input", sol.input, "edge list path")->required();
    solve->add_option("--measure", sol.measure, "thr | fi")->required();
    solve->add_option("--algo", sol.algo, "exact | greedy | greedy-eager");
    solve->add_option("-k,--k", sol.k, "deletion budget (default 20)");
    solve->add_option("--seed", sol.seed);
    solve->add_option("--tol", sol.tol, "numeric tolerance recorded in the report");
    solve->add_option("--tie-tol", sol.tie_tol, "exact solver optimum tie tolerance");
    solve->add_option("--budget", sol.budget, "exact solver enumeration budget");
    solve->add_flag("--score", sol.score, "score the solution family");
    solve->add_option("--rank-scheme", sol.rank_scheme,
                      "strict | fractional | percentile (default percentile)");
    solve->add_option("--threads", sol.threads, "worker threads (env GRODEL_THREADS)");
    solve->add_flag("--no-lcc", sol.no_lcc, "skip largest-component preprocessing");
    solve->add_option("--out", sol.out_path, "report path (default: stdout)");

    ScoreOpts sco;
    auto* score = app.add_subcommand("score", "score an edge set by closeness quantiles");
    score->add_option("input", sco.input, "edge list path")->required();
    score->add_option("edges", sco.edges_path, "edge set path")->required();
    score->add_option("--rank-scheme", sco.rank_scheme,
                      "strict | fractional | percentile (default strict)");
    score->add_flag("--no-lcc", sco.no_lcc, "skip largest-component preprocessing");

    ExportDotOpts dot;
    auto* export_dot = app.add_subcommand("export-dot", "write the graph as DOT");
    export_dot->add_option("input", dot.input, "edge list path")->required();
    export_dot->add_option("edges", dot.edges_path, "edge set to highlight");
    export_dot->add_option("--out", dot.out_path, "output path (default: stdout)");
    export_dot->add_flag("--no-lcc", dot.no_lcc, "skip largest-component preprocessing");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            for (auto* sub : generate->get_subcommands()) {
                gen.family = sub->get_name();
                return cmd_generate(gen, out);
            }
        }
        if (measure->parsed())
            return cmd_measure(meas, out);
        if (solve->parsed())
            return cmd_solve(sol, out);
        if (score->parsed())
            return cmd_score(sco, out);
        if (export_dot->parsed())
            return cmd_export_dot(dot, out);
        err << "error: no subcommand given\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

}  // namespace grodel
