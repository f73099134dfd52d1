// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. `--extended` runs the three
// large exact-enumeration instances instead of the standard set.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "corpus.hpp"
#include "known_differences.hpp"
#include "grodel/scoring.hpp"
#include "grodel/solvers.hpp"

using namespace grodel;
using namespace grodel::testing;

namespace {

int g_threads = 1;

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "    failed: " << what << "\n";
        }
    }
    void note(const std::string& what) { notes << "    " << what << "\n"; }
};

double round2(double x) {
    return std::round(x * 100.0) / 100.0;
}

std::string fmt2(const ScoreAggregate& a) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "(" << round2(a.min) << ", " << round2(a.mean) << ", " << round2(a.max) << ")";
    return os.str();
}

bool agg_matches(const ScoreAggregate& got, double mn, double mean, double mx) {
    return round2(got.min) == mn && round2(got.mean) == mean && round2(got.max) == mx;
}

struct TableRow {
    std::string name;
    Graph graph;
    double fi_min, fi_mean, fi_max;
    double thr_min, thr_mean, thr_max;
};

// One Table-1 style row: exact k=5 for both measures, percentile-ranked
// closeness scores compared at 2 printed decimals, and the THR-above-FI
// ordering that must hold regardless.
void check_table_row(Check& c, const TableRow& row) {
    auto fi = exact_solve(row.graph, 5, MeasureKind::ForestIndex, g_threads);
    auto thr = exact_solve(row.graph, 5, MeasureKind::TotalHarmonicResistance, g_threads);
    auto fi_scores = score_solution_family(row.graph, fi.solutions, RankScheme::Percentile);
    auto thr_scores = score_solution_family(row.graph, thr.solutions, RankScheme::Percentile);
    c.note(row.name + " FI  " + fmt2(fi_scores) + " expected (" +
           std::to_string(row.fi_min).substr(0, 4) + ", " +
           std::to_string(row.fi_mean).substr(0, 4) + ", " +
           std::to_string(row.fi_max).substr(0, 4) + "), family " +
           std::to_string(fi.solutions.size()));
    c.note(row.name + " THR " + fmt2(thr_scores) + " expected (" +
           std::to_string(row.thr_min).substr(0, 4) + ", " +
           std::to_string(row.thr_mean).substr(0, 4) + ", " +
           std::to_string(row.thr_max).substr(0, 4) + "), family " +
           std::to_string(thr.solutions.size()));
    c.expect(agg_matches(fi_scores, row.fi_min, row.fi_mean, row.fi_max),
             row.name + " FI scores mismatch");
    c.expect(agg_matches(thr_scores, row.thr_min, row.thr_mean, row.thr_max),
             row.name + " THR scores mismatch");
    c.expect(thr_scores.min > fi_scores.max,
             row.name + " ordering: THR min must exceed FI max");
}

// --- standard criteria ----------------------------------------------------

bool criterion1_grid5x3(Check& c) {
    check_table_row(c, {"grid5x3", grid_graph(3, 5), 0.24, 0.24, 0.24, 0.53, 0.60, 0.67});
    c.note("ranking scheme: percentile (fraction of strictly less central nodes);");
    c.note("neither the strict-rank default nor the fractional fallback reproduces");
    c.note("the reference scores - documented deviation.");
    return c.ok;
}

bool criterion2_fig_structure(Check& c) {
    Graph g = grid_graph(3, 5);
    auto thr = exact_solve(g, 5, MeasureKind::TotalHarmonicResistance, g_threads);
    const EdgeSet column_cut{{1, 2}, {6, 7}, {11, 12}};
    bool found_cut = false;
    for (const auto& sol : thr.solutions)
        found_cut |= std::includes(sol.begin(), sol.end(), column_cut.begin(), column_cut.end());
    c.expect(found_cut, "some THR optimum contains the full column 1-2 cut");

    auto fi = exact_solve(g, 5, MeasureKind::ForestIndex, g_threads);
    bool found_peripheral = false;
    for (const auto& sol : fi.solutions) {
        auto cm = connected_components(remove_edges(g, sol));
        std::vector<int> sizes = cm.sizes;
        std::sort(sizes.begin(), sizes.end());
        if (cm.num_components == 4 && sizes[0] == 1 && sizes[1] == 1 && sizes[2] == 1)
            found_peripheral = true;
    }
    c.expect(found_peripheral, "some FI optimum isolates three peripheral vertices");
    return c.ok;
}

bool criterion3_identities(Check& c) {
    const auto corpus = build_corpus();
    c.note("corpus size: " + std::to_string(corpus.size()));
    c.expect(corpus.size() >= 50, "corpus must span at least 50 graphs");
    const double tol = 1e-8;
    for (const auto& [name, g] : corpus) {
        auto st = pseudoinverse(g);
        const DenseMatrix omega = forest_matrix(g);
        auto st_star = pseudoinverse(augment_graph(g));
        const double fi_trace = forest_index(g);

        double rr_sum = 0.0, fi_sum = 0.0;
        bool thm1_ok = true;
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
                const double fd = forest_distance(omega, u, v);
                fi_sum += fd;
                thm1_ok &= std::abs(fd - effective_resistance(st_star, u, v)) <= tol;
                if (st.comps.num_components == 1)
                    rr_sum += effective_resistance(st, u, v);
            }
        }
        c.expect(thm1_ok, name + ": forest distance equals augmented resistance");
        if (st.comps.num_components == 1)
            c.expect(std::abs(total_effective_resistance(st) - rr_sum) <= tol,
                     name + ": trace form of total resistance equals the pairwise sum");
        c.expect(std::abs(fi_trace - fi_sum) <= tol,
                 name + ": trace form of the forest index equals the pairwise sum");
        c.expect(std::abs(forest_index_augmented(st_star, g.num_nodes()) - fi_trace) <= tol,
                 name + ": augmented trace identity");
        for (const auto& e : g.edges()) {
            const double direct = forest_index(remove_edge(g, e)) - fi_trace;
            c.expect(std::abs(fi_loss(st_star, e.u, e.v, g.num_nodes()) - direct) <= tol,
                     name + ": forest-index loss equals the direct difference");
        }
    }
    return c.ok;
}

bool criterion4_updates(Check& c) {
    const auto corpus = build_corpus();
    for (const auto& [name, g] : corpus) {
        auto st = pseudoinverse(g);
        const auto bridges = find_bridges(g);
        for (const auto& e : g.edges()) {
            Graph after = remove_edge(g, e);
            auto updated = std::binary_search(bridges.begin(), bridges.end(), e)
                               ? bridge_split_update(st, after, e.u, e.v)
                               : sherman_morrison_downdate(st, e.u, e.v);
            const double diff =
                (updated.linv - pseudoinverse(after).linv).cwiseAbs().maxCoeff();
            c.expect(diff <= 1e-8, name + ": update equals recompute for every edge");
        }
    }
    // Random 10-step deletion sequences: per-round greedy values match
    // from-scratch measures.
    std::mt19937_64 rng(1234);
    int runs = 0;
    while (runs < 20) {
        const auto& pick = corpus[rng() % corpus.size()];
        if (pick.graph.num_edges() < 10)
            continue;
        ++runs;
        const int k = std::min<int>(10, static_cast<int>(pick.graph.num_edges()));
        for (auto measure : {MeasureKind::TotalHarmonicResistance, MeasureKind::ForestIndex}) {
            auto tr = greedy_solve(pick.graph, k, measure, g_threads);
            Graph current = pick.graph;
            for (int r = 0; r < k; ++r) {
                current = remove_edge(current, tr.picked[r]);
                const double scratch =
                    measure == MeasureKind::ForestIndex
                        ? forest_index(current)
                        : total_harmonic_resistance(pseudoinverse(current));
                c.expect(std::abs(tr.value_after[r] - scratch) <= 1e-7,
                         pick.name + ": per-round value matches from-scratch measure");
            }
        }
    }
    return c.ok;
}

bool criterion5_greedy_sanity(Check& c) {
    int divergences = 0;
    for (const auto& [name, g] : build_corpus()) {
        if (g.num_edges() == 0)
            continue;
        for (auto measure : {MeasureKind::TotalHarmonicResistance, MeasureKind::ForestIndex}) {
            auto exact = exact_solve(g, 1, measure, g_threads);
            auto tr = greedy_solve(g, 1, measure, g_threads);
            c.expect(std::abs(tr.value_after[0] - exact.optimal_value) <= 1e-9,
                     name + ": greedy k=1 attains the exact optimum value");

            const int k = std::min<int>(5, static_cast<int>(g.num_edges()));
            auto lazy = greedy_solve(g, k, measure, g_threads);
            auto eager = eager_greedy_solve(g, k, measure, g_threads);
            if (lazy.picked != eager.picked) {
                ++divergences;
                c.expect(is_known_difference(name, measure),
                         name + ": lazy selections differ from eager (unrecorded)");
            }
        }
    }
    c.note("lazy/eager divergences on the regression corpus: " + std::to_string(divergences) +
           " (all recorded; neither objective is submodular)");
    return c.ok;
}

bool criterion6_spot_values(Check& c) {
    const double tol = 1e-12;
    auto near = [&](double a, double b) { return std::abs(a - b) <= tol; };
    c.expect(near(total_harmonic_resistance(pseudoinverse(complete_graph(3))), 4.5),
             "R_h(K3) = 4.5");
    c.expect(near(total_harmonic_resistance(pseudoinverse(path_graph(3))), 2.5),
             "R_h(P3) = 2.5");
    c.expect(near(forest_index(complete_graph(2)), 2.0 / 3), "R_f(K2) = 2/3");
    for (NodeId n : {2, 3, 7})
        c.expect(near(forest_index(empty_graph(n)), n * (n - 1.0)),
                 "R_f(empty graph) = n(n-1)");
    c.expect(near(total_effective_resistance(pseudoinverse(complete_graph(3))), 2.0),
             "R_r(K3) = 2");
    auto k3 = pseudoinverse(complete_graph(3));
    c.expect(near(effective_resistance(k3, 0, 1), 2.0 / 3), "r_K3(u,v) = 2/3");
    auto p3 = pseudoinverse(path_graph(3));
    c.expect(near(effective_resistance(p3, 0, 1), 1.0), "bridge resistance = 1 (path)");
    Graph pendant(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
    c.expect(near(effective_resistance(pseudoinverse(pendant), 3, 4), 1.0),
             "bridge resistance = 1 (pendant)");
    return c.ok;
}

bool criterion7_ba_ws_substitute(Check& c) {
    // The published random-instance rows are not reproducible (unpublished
    // seeds); the substitute asserts the same ordering on fresh seeded
    // instances.
    for (std::uint64_t seed : {1}) {
        for (auto [name, g] :
             {std::pair<std::string, Graph>{"ba(3,18)", barabasi_albert_graph(3, 18, seed)},
              {"ws(16,3,0.7)",
               largest_connected_component(watts_strogatz_graph(16, 3, 0.7, seed)).graph}}) {
            auto fi = exact_solve(g, 5, MeasureKind::ForestIndex, g_threads);
            auto thr = exact_solve(g, 5, MeasureKind::TotalHarmonicResistance, g_threads);
            auto fi_scores = score_solution_family(g, fi.solutions, RankScheme::Percentile);
            auto thr_scores =
                score_solution_family(g, thr.solutions, RankScheme::Percentile);
            c.note(name + " seed " + std::to_string(seed) + ": THR " + fmt2(thr_scores) +
                   " vs FI " + fmt2(fi_scores));
            c.expect(thr_scores.min > fi_scores.max,
                     name + ": THR solution family scores above the FI family");
        }
    }
    return c.ok;
}

// --- extended criteria (the three large Table-1 instances) -----------------

bool criterion1x_grid7x4(Check& c) {
    check_table_row(c, {"grid7x4", grid_graph(4, 7), 0.11, 0.11, 0.11, 0.76, 0.76, 0.76});
    return c.ok;
}

bool criterion1x_grid5x6(Check& c) {
    check_table_row(c, {"grid5x6", grid_graph(5, 6), 0.09, 0.10, 0.13, 0.69, 0.69, 0.69});
    if (!c.ok) {
        // The reference FI row reflects a wider optimum family than the
        // exact one: at tie tolerance 1e-9 the family is 4 exactly-tied
        // solutions all scoring 0.13. Widening the tie band to 0.1 absolute
        // (the reference evaluation's solver accuracy) reproduces the row.
        auto fi_wide = exact_solve(grid_graph(5, 6), 5, MeasureKind::ForestIndex, g_threads,
                                   kDefaultEnumBudget, 0.1);
        auto wide_scores =
            score_solution_family(grid_graph(5, 6), fi_wide.solutions, RankScheme::Percentile);
        c.note("analysis: FI family at tie band 0.1 has " +
               std::to_string(fi_wide.solutions.size()) + " members scoring " +
               fmt2(wide_scores) + (agg_matches(wide_scores, 0.09, 0.10, 0.13)
                                        ? " == reference row"
                                        : " != reference row"));
    }
    return c.ok;
}

bool criterion1x_hotdog5x6(Check& c) {
    check_table_row(c, {"hotdog5x6", hotdog_graph(5, 6), 0.14, 0.14, 0.14, 0.71, 0.71, 0.71});
    return c.ok;
}

struct Criterion {
    std::string name;
    std::function<bool(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    std::string instance;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0)
            extended = true;
        else if (std::strcmp(argv[i], "--instance") == 0 && i + 1 < argc)
            instance = argv[++i];
    }
    g_threads = std::max(1u, std::thread::hardware_concurrency());

    const std::vector<Criterion> extended_criteria = {
        {"criterion-1x table scores grid7x4 (exact k=5)", criterion1x_grid7x4},
        {"criterion-1x table scores grid5x6 (exact k=5)", criterion1x_grid5x6},
        {"criterion-1x table scores hotdog5x6 (exact k=5)", criterion1x_hotdog5x6},
    };

    std::vector<Criterion> criteria;
    if (!instance.empty()) {
        for (const auto& cr : extended_criteria)
            if (cr.name.find(instance) != std::string::npos)
                criteria.push_back(cr);
        if (criteria.empty()) {
            std::cerr << "unknown instance: " << instance << "\n";
            return 2;
        }
    } else if (extended) {
        criteria = extended_criteria;
    } else {
        criteria = {
            {"criterion-1 table scores grid5x3 (exact k=5)", criterion1_grid5x3},
            {"criterion-2 optimum structure grid5x3", criterion2_fig_structure},
            {"criterion-3 identity suite (>=50 graphs)", criterion3_identities},
            {"criterion-4 update equals recompute", criterion4_updates},
            {"criterion-5 greedy sanity", criterion5_greedy_sanity},
            {"criterion-6 analytic spot values", criterion6_spot_values},
            {"criterion-7 ba/ws substitute ordering", criterion7_ba_ws_substitute},
        };
    }

    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        bool ok = false;
        try {
            ok = cr.run(check);
        } catch (const std::exception& e) {
            check.notes << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS: " : "FAIL: ") << cr.name << "\n" << check.notes.str();
        failures += ok ? 0 : 1;
    }
    if (failures == 0)
        std::cout << "all criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
