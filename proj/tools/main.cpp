#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "scdecomp/decompose.hpp"
#include "scdecomp/digraph.hpp"
#include "scdecomp/dominators.hpp"
#include "scdecomp/enumerate.hpp"
#include "scdecomp/errors.hpp"
#include "scdecomp/hamiltonian.hpp"
#if defined(SCDECOMP_HAVE_ORACLE)
#include "scdecomp/oracle.hpp"
#endif

using namespace scdecomp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDiagnosis = 2;

// Thrown for outcomes that are diagnoses rather than failures, e.g. feeding
// a non-strongly-connected graph to a command that requires one.
struct Diagnosis {
    std::string message;
};

Digraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_edge_list(in);
}

std::string set_to_line(const Digraph& g, const VertexSet& s) {
    std::string line;
    for (Vertex v : s) {
        if (!line.empty()) line += ' ';
        line += g.name_of(v);
    }
    return line;
}

std::string order_to_line(const Digraph& g, const std::vector<Vertex>& order) {
    std::string line;
    for (Vertex v : order) {
        if (!line.empty()) line += ' ';
        line += g.name_of(v);
    }
    return line;
}

json set_to_json(const Digraph& g, const VertexSet& s) {
    json arr = json::array();
    for (Vertex v : s) {
        if (g.has_labels())
            arr.push_back(g.name_of(v));
        else
            arr.push_back(v);
    }
    return arr;
}

json order_to_json(const Digraph& g, const std::vector<Vertex>& order) {
    json arr = json::array();
    for (Vertex v : order) {
        if (g.has_labels())
            arr.push_back(g.name_of(v));
        else
            arr.push_back(v);
    }
    return arr;
}

const char* kind_name(DisjointnessKind kind) {
    switch (kind) {
        case DisjointnessKind::MaxPssDisjoint: return "MaxPssDisjoint";
        case DisjointnessKind::MinRsDisjoint: return "MinRsDisjoint";
        case DisjointnessKind::Both: return "Both";
    }
    return "?";
}

void require_strong_input(const Digraph& g, const char* command) {
    if (g.vertex_count() < 2)
        throw Diagnosis{std::string(command) + ": graph needs at least two vertices"};
    if (!is_strongly_connected(g))
        throw Diagnosis{std::string(command) + ": graph is not strongly connected"};
}

int cmd_classify(const std::string& path) {
    Digraph g = load_graph(path);
    require_strong_input(g, "classify");
    Classification c = classify(g);
    json report;
    report["kind"] = kind_name(c.kind);
    json witnesses = json::array();
    for (const MinRsPath& y : c.witnesses) witnesses.push_back(set_to_json(g, y.set()));
    report["minrs_witnesses"] = std::move(witnesses);
    std::cout << report.dump() << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& path, bool as_json) {
    Digraph g = load_graph(path);
    if (g.vertex_count() < 1) throw Diagnosis{"decompose: graph is empty"};
    std::vector<VertexSet> classes = maxpss_of_any_digraph(g);
    if (as_json) {
        json arr = json::array();
        for (const VertexSet& x : classes) arr.push_back(set_to_json(g, x));
        std::cout << json{{"maxpss", std::move(arr)}}.dump() << "\n";
    } else {
        for (const VertexSet& x : classes) std::cout << set_to_line(g, x) << "\n";
    }
    return kExitOk;
}

int cmd_minrs(const std::string& path, int root, bool as_json) {
    Digraph g = load_graph(path);
    require_strong_input(g, "minrs");
    if (root < 0 || root >= g.vertex_count()) throw Diagnosis{"minrs: root out of range"};
    MinRsGeneration run = gen_minrs_without_root(g, root);
    if (as_json) {
        json arr = json::array();
        for (const MinRsPath& y : run.minrs) arr.push_back(order_to_json(g, y.order));
        std::cout << json{{"minrs", std::move(arr)}}.dump() << "\n";
    } else {
        for (const MinRsPath& y : run.minrs) std::cout << order_to_line(g, y.order) << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& path, bool count_only, std::int64_t limit, bool as_json) {
    Digraph g = load_graph(path);
    std::uint64_t emitted = 0;
    json arr = json::array();
    enumerate_strong_subgraphs(g, [&](const VertexSet& s) {
        if (limit >= 0 && emitted >= static_cast<std::uint64_t>(limit)) return false;
        ++emitted;
        if (!count_only) {
            if (as_json)
                arr.push_back(set_to_json(g, s));
            else
                std::cout << set_to_line(g, s) << "\n";
        }
        return limit < 0 || emitted < static_cast<std::uint64_t>(limit);
    });
    if (count_only) {
        std::cout << emitted << "\n";
    } else if (as_json) {
        std::cout << json{{"solutions", std::move(arr)}, {"count", emitted}}.dump() << "\n";
    }
    return kExitOk;
}

int cmd_hamiltonian(const std::string& path, bool as_json) {
    Digraph g = load_graph(path);
    require_strong_input(g, "hamiltonian");
    if (classify(g).kind == DisjointnessKind::MinRsDisjoint)
        throw Diagnosis{
            "hamiltonian: maximal proper subsets are not pairwise disjoint; "
            "the construction does not apply"};
    HamCycle cycle = hamiltonian_cycle(g);
    if (as_json)
        std::cout << json{{"cycle", order_to_json(g, cycle.order)}}.dump() << "\n";
    else
        std::cout << order_to_line(g, cycle.order) << "\n";
    return kExitOk;
}

int cmd_hamiltonian_search(const std::string& path, std::uint64_t budget, bool as_json) {
    Digraph g = load_graph(path);
    SpanningSearchResult r = hamiltonian_via_spanning_subgraph(g, budget);
    switch (r.status) {
        case SpanningSearchStatus::Found:
            if (as_json)
                std::cout << json{{"status", "found"},
                                  {"cycle", order_to_json(g, r.cycle->order)},
                                  {"nodes", r.nodes_explored}}
                                 .dump()
                          << "\n";
            else
                std::cout << order_to_line(g, r.cycle->order) << "\n";
            return kExitOk;
        case SpanningSearchStatus::NoneExists:
            if (as_json)
                std::cout << json{{"status", "none"}, {"nodes", r.nodes_explored}}.dump() << "\n";
            else
                std::cout << "none\n";
            return kExitOk;
        case SpanningSearchStatus::BudgetExhausted:
            if (as_json)
                std::cout << json{{"status", "unknown"}, {"nodes", r.nodes_explored}}.dump()
                          << "\n";
            else
                std::cout << "unknown\n";
            return kExitDiagnosis;
    }
    return kExitError;
}

int cmd_augment(const std::string& path, bool as_json) {
    Digraph g = load_graph(path);
    require_strong_input(g, "augment");
    if (g.vertex_count() < 3) throw Diagnosis{"augment: graph needs at least three vertices"};
    if (classify(g).kind == DisjointnessKind::MinRsDisjoint)
        throw Diagnosis{"augment: maximal proper subsets are not pairwise disjoint"};
    auto [from, to] = minrs_disjoint_making_edge(g);
    if (as_json)
        std::cout << json{{"arc", {g.has_labels() ? json(g.name_of(from)) : json(from),
                                   g.has_labels() ? json(g.name_of(to)) : json(to)}}}
                         .dump()
                  << "\n";
    else
        std::cout << g.name_of(from) << " " << g.name_of(to) << "\n";
    return kExitOk;
}

int cmd_dominator_tree(const std::string& path, int root, bool use_transpose) {
    Digraph g = load_graph(path);
    if (root < 0 || root >= g.vertex_count())
        throw Diagnosis{"dominator-tree: root out of range"};
    Digraph base = use_transpose ? transpose(g) : g;
    DominatorTree t = build_dominator_tree(base, root);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (t.is_root(v)) continue;
        std::cout << g.name_of(v) << " " << g.name_of(t.parent(v)) << "\n";
    }
    return kExitOk;
}

int cmd_bench(const std::string& path, int repetitions, std::int64_t limit) {
    using clock = std::chrono::steady_clock;
    if (limit < 0) limit = 1000; // enumeration may be astronomically large
    Digraph g = load_graph(path);
    json report;
    report["command"] = "bench";
    report["input"] = path;
    report["n"] = g.vertex_count();
    report["m"] = g.arc_count();
    report["repetitions"] = repetitions;
    if (repetitions <= 0) {
        std::cout << report.dump() << "\n";
        return kExitOk;
    }

    bool strong = is_strongly_connected(g) && g.vertex_count() >= 2;
    if (strong) {
        Classification c = classify(g);
        report["classification"] = kind_name(c.kind);
        report["minrs_witnesses"] = c.witnesses.size();
    } else {
        report["classification"] = "NotStronglyConnected";
    }

    std::size_t maxpss_count = 0;
    auto t0 = clock::now();
    for (int rep = 0; rep < repetitions; ++rep)
        maxpss_count = maxpss_of_any_digraph(g).size();
    auto t1 = clock::now();
    double decompose_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report["decompose"] = {{"maxpss", maxpss_count},
                           {"total_ms", decompose_ms},
                           {"mean_ms", decompose_ms / repetitions}};

    EnumCounters counters;
    std::vector<std::uint64_t> gaps;
    std::uint64_t last = 0;
    std::uint64_t emitted = 0;
    auto t2 = clock::now();
    enumerate_strong_subgraphs(
        g,
        [&](const VertexSet&) {
            gaps.push_back(counters.touched - last);
            last = counters.touched;
            ++emitted;
            return limit < 0 || emitted < static_cast<std::uint64_t>(limit);
        },
        &counters);
    auto t3 = clock::now();

    std::sort(gaps.begin(), gaps.end());
    std::uint64_t max_gap = gaps.empty() ? 0 : gaps.back();
    std::uint64_t p99 = 0;
    if (!gaps.empty()) {
        std::size_t idx = (gaps.size() * 99) / 100;
        if (idx >= gaps.size()) idx = gaps.size() - 1;
        p99 = gaps[idx];
    }
    report["enumerate"] = {
        {"outputs", emitted},
        {"wall_ms", std::chrono::duration<double, std::milli>(t3 - t2).count()},
        {"touched_total", counters.touched},
        {"max_gap", max_gap},
        {"p99_gap", p99},
        {"gap_budget_n_plus_m", g.vertex_count() + g.arc_count()},
        {"peak_depth", counters.peak_depth},
    };
    std::cout << report.dump() << "\n";
    return kExitOk;
}

#if defined(SCDECOMP_HAVE_ORACLE)
int cmd_selftest(int graphs) {
    std::uint64_t seed = 0x5eed5eedULL;
    if (const char* env = std::getenv("SSD_SEED")) seed = std::strtoull(env, nullptr, 10);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double probabilities[] = {0.15, 0.3, 0.5, 0.8};

    int mismatches = 0;
    for (int i = 0; i < graphs; ++i) {
        int n = 2 + static_cast<int>(rng() % 7);
        double p = probabilities[i % 4];
        std::vector<std::pair<Vertex, Vertex>> arcs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && coin(rng) < p) arcs.emplace_back(u, v);
        Digraph g = Digraph::from_edges(n, arcs);

        auto sort_family = [](std::vector<VertexSet> f) {
            std::sort(f.begin(), f.end());
            return f;
        };
        oracle::SetSystem system = oracle::brute_solutions(g);
        if (sort_family(collect_strong_subgraphs(g)) != sort_family(system.solutions)) {
            ++mismatches;
            continue;
        }
        if (is_strongly_connected(g) && n >= 2) {
            auto fast = sort_family(maxpss_all(g).second);
            auto brute = sort_family(oracle::brute_maxpss(system, VertexSet::full(n)));
            if (fast != brute) ++mismatches;
        }
    }
    std::cout << "selftest: seed=" << seed << " graphs=" << graphs
              << " mismatches=" << mismatches << "\n";
    return mismatches == 0 ? kExitOk : kExitError;
}
#endif

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly-connected decomposition, enumeration and Hamiltonian construction"};
    app.require_subcommand(1);

    std::string path;
    int root = 0;
    bool use_transpose = false;
    bool count_only = false;
    bool as_json = false;
    std::int64_t limit = -1;
    std::uint64_t budget = 1'000'000;
    int repetitions = 1;
#if defined(SCDECOMP_HAVE_ORACLE)
    int selftest_graphs = 400;
#endif

    auto* classify_cmd = app.add_subcommand("classify", "disjointness kind as JSON");
    classify_cmd->add_option("file", path)->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "all maximal proper strongly-connected subsets");
    decompose_cmd->add_option("file", path)->required();
    decompose_cmd->add_flag("--json", as_json);

    auto* minrs_cmd = app.add_subcommand("minrs", "minimal removable sets avoiding the root");
    minrs_cmd->add_option("file", path)->required();
    minrs_cmd->add_option("--root", root);
    minrs_cmd->add_flag("--json", as_json);

    auto* enum_cmd =
        app.add_subcommand("enumerate", "stream all strongly-connected induced subgraphs");
    enum_cmd->add_option("file", path)->required();
    enum_cmd->add_flag("--count-only", count_only);
    enum_cmd->add_option("--limit", limit);
    enum_cmd->add_flag("--json", as_json);

    auto* ham_cmd = app.add_subcommand("hamiltonian", "construct a Hamiltonian cycle");
    ham_cmd->add_option("file", path)->required();
    ham_cmd->add_flag("--json", as_json);

    auto* search_cmd = app.add_subcommand("hamiltonian-search",
                                          "budgeted search for a qualifying spanning subgraph");
    search_cmd->add_option("file", path)->required();
    search_cmd->add_option("--budget", budget);
    search_cmd->add_flag("--json", as_json);

    auto* augment_cmd = app.add_subcommand("augment", "arc whose addition makes the minimal "
                                                      "removable sets pairwise disjoint");
    augment_cmd->add_option("file", path)->required();
    augment_cmd->add_flag("--json", as_json);

    auto* dom_cmd = app.add_subcommand("dominator-tree", "child/parent pairs of the tree");
    dom_cmd->add_option("file", path)->required();
    dom_cmd->add_option("--root", root);
    dom_cmd->add_flag("--transpose", use_transpose);

    auto* bench_cmd = app.add_subcommand("bench", "timing and delay report as JSON");
    bench_cmd->add_option("file", path)->required();
    bench_cmd->add_option("--repetitions", repetitions);
    bench_cmd->add_option("--limit", limit);

#if defined(SCDECOMP_HAVE_ORACLE)
    auto* selftest_cmd =
        app.add_subcommand("selftest", "compare fast paths against the brute-force oracle");
    selftest_cmd->add_option("--graphs", selftest_graphs);
#endif

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(path);
        if (decompose_cmd->parsed()) return cmd_decompose(path, as_json);
        if (minrs_cmd->parsed()) return cmd_minrs(path, root, as_json);
        if (enum_cmd->parsed()) return cmd_enumerate(path, count_only, limit, as_json);
        if (ham_cmd->parsed()) return cmd_hamiltonian(path, as_json);
        if (search_cmd->parsed()) return cmd_hamiltonian_search(path, budget, as_json);
        if (augment_cmd->parsed()) return cmd_augment(path, as_json);
        if (dom_cmd->parsed()) return cmd_dominator_tree(path, root, use_transpose);
        if (bench_cmd->parsed()) return cmd_bench(path, repetitions, limit);
#if defined(SCDECOMP_HAVE_ORACLE)
        if (selftest_cmd->parsed()) return cmd_selftest(selftest_graphs);
#endif
    } catch (const Diagnosis& d) {
        std::cerr << d.message << "\n";
        return kExitDiagnosis;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return kExitDiagnosis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
