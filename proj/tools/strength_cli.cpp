// Command-line front end: bounds, exact strength, structure recognition, generators,
// verification suites and Kneser experiments.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strength/bounds.hpp"
#include "strength/error.hpp"
#include "strength/graph.hpp"
#include "strength/harness.hpp"
#include "strength/invariants.hpp"
#include "strength/serialize.hpp"
#include "strength/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace strength;

namespace {

enum ExitCode : int { ok = 0, invalid = 1, budget = 2, suite_failed = 3 };

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const std::string& path) {
    return parse_graph(read_input(path));
}

std::uint64_t parse_budget(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v == 0) throw ValidationError("budget must be a positive integer, got '" + text + "'");
    return v;
}

// STRENGTH_BUDGET replaces both node budgets; an explicit --budget wins over it.
SolverOptions solver_options(std::uint64_t flag_budget) {
    SolverOptions opts;
    std::uint64_t b = 0;
    if (const char* env = std::getenv("STRENGTH_BUDGET"); env && *env) b = parse_budget(env);
    if (flag_budget) b = flag_budget;
    if (b) opts.node_budget = opts.independence_budget = b;
    return opts;
}

std::vector<std::size_t> one_based(const VertexSet& s) {
    std::vector<std::size_t> out;
    for (Vertex v : s) out.push_back(v + 1);
    return out;
}

json recognize_report(const Graph& g) {
    json out;
    out["n"] = g.order();
    out["edges"] = g.edge_count();
    out["connected"] = is_connected(g);
    out["min_degree"] = g.order() ? json(min_degree(g)) : json(nullptr);

    auto b = bipartition(g);
    if (b) {
        out["bipartite"] = {{"U", one_based(b->side_u)},
                            {"W", one_based(b->side_w)},
                            {"m", b->m()},
                            {"n_small", b->n_small()},
                            {"complete", is_complete_bipartite(g, *b)}};
        auto m = max_bipartite_matching(g, *b);
        json edges = json::array();
        for (auto [u, w] : m.edges) edges.push_back({u + 1, w + 1});
        out["matching"] = {{"size", m.size()}, {"edges", edges}, {"saturating", m.size() == b->n_small()}};
    } else {
        out["bipartite"] = nullptr;
        out["matching"] = nullptr;
    }
    auto via = beta_via_saturating_matching(g);
    out["beta_via_matching"] = via ? json(*via) : json(nullptr);

    if (auto parts = recognize_complete_multipartite(g)) {
        auto s = multipartite_strength(g);
        out["multipartite"] = {{"sizes", parts->sizes},
                               {"strength", s ? json(s->finite_value()) : json(nullptr)}};
    } else {
        out["multipartite"] = nullptr;
    }
    out["matched_bipartite_gap"] = matched_bipartite_gap(g);
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ValidationError("bad part size '" + item + "'");
        sizes.push_back(v);
    }
    return sizes;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content) {
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + (dir / name).string());
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strength of graphs: bounds, exact solver and verification suites"};
    app.require_subcommand(1);

    std::string file;
    std::uint64_t budget_flag = 0;

    auto* bounds_cmd = app.add_subcommand("bounds", "Print every strength bound as JSON");
    bounds_cmd->add_option("FILE", file, "Edge list or graph6 file, '-' for stdin")->required();

    bool use_oracle = false;
    auto* strength_cmd = app.add_subcommand("strength", "Compute the exact strength as JSON");
    strength_cmd->add_option("FILE", file, "Edge list or graph6 file, '-' for stdin")->required();
    strength_cmd->add_flag("--oracle", use_oracle, "Exhaustive search over all numberings (order <= 9)");
    strength_cmd->add_option("--budget", budget_flag, "Search node budget");

    auto* recognize_cmd = app.add_subcommand("recognize", "Report bipartite, matching and multipartite structure");
    recognize_cmd->add_option("FILE", file, "Edge list or graph6 file, '-' for stdin")->required();

    bool as_graph6 = false;
    std::size_t cap = default_vertex_cap;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_flag("--graph6", as_graph6, "Emit graph6 instead of an edge list");
    gen_cmd->add_option("--cap", cap, "Vertex cap for generators");
    std::size_t kn = 0, kk = 0;
    auto* gen_kneser_cmd = gen_cmd->add_subcommand("kneser", "Kneser graph KG(N,K)");
    gen_kneser_cmd->add_option("N", kn)->required();
    gen_kneser_cmd->add_option("K", kk)->required();
    std::string sizes_text;
    auto* gen_multi_cmd = gen_cmd->add_subcommand("multipartite", "Complete multipartite graph");
    gen_multi_cmd->add_option("SIZES", sizes_text, "Comma-separated part sizes")->required();
    auto* gen_comp_cmd = gen_cmd->add_subcommand("complement", "Complement of a graph");
    gen_comp_cmd->add_option("FILE", file)->required();

    std::string suite;
    std::size_t max_order = 0;
    std::string out_dir = "out";
    SuiteOptions suite_opts;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("SUITE", suite, "One of: sandwich, lemma3, lemma5, thm6, thm7, kn-complete, oracle")
        ->required();
    verify_cmd->add_option("--max-order", max_order, "Largest order to enumerate")->required();
    verify_cmd->add_option("--out", out_dir, "Directory for report-<suite>.json");
    verify_cmd->add_option("--threads", suite_opts.threads, "Worker threads (0 = hardware)");
    verify_cmd->add_option("--samples", suite_opts.random_samples, "Random order 8-9 graphs for the oracle suite");
    verify_cmd->add_option("--instances", suite_opts.thm7_instances, "Random instances for thm7");
    verify_cmd->add_option("--seed", suite_opts.seed, "Random seed");
    verify_cmd->add_option("--budget", budget_flag, "Search node budget");

    std::size_t max_n = 0;
    bool complement_family = false;
    std::size_t scan_cap = default_vertex_cap;
    auto* scan_cmd = app.add_subcommand("kneser-scan", "Bounds and strength of Kneser graphs as CSV");
    scan_cmd->add_option("--max-n", max_n, "Largest ground set size")->required();
    scan_cmd->add_flag("--complement", complement_family, "Scan complements of Kneser graphs");
    scan_cmd->add_option("--cap", scan_cap, "Skip graphs with more vertices than this");
    scan_cmd->add_option("--out", out_dir, "Directory for kneser-scan.csv");
    scan_cmd->add_option("--budget", budget_flag, "Search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return invalid;
    }

    try {
        if (*bounds_cmd) {
            std::cout << to_json(bounds_report(load_graph(file), solver_options(0).independence_budget)).dump()
                      << '\n';
            return ok;
        }
        if (*strength_cmd) {
            Graph g = load_graph(file);
            auto opts = solver_options(budget_flag);
            auto result = use_oracle ? strength_oracle(g) : strength_exact(g, opts);
            std::cout << to_json(result).dump() << '\n';
            return ok;
        }
        if (*recognize_cmd) {
            std::cout << recognize_report(load_graph(file)).dump(2) << '\n';
            return ok;
        }
        if (*gen_cmd) {
            Graph g;
            if (*gen_kneser_cmd) {
                g = gen_kneser({kn, kk}, cap);
            } else if (*gen_multi_cmd) {
                auto sizes = parse_sizes(sizes_text);
                g = gen_complete_multipartite(sizes).graph;
                if (g.order() > cap) throw ResourceError("graph exceeds the vertex cap of " + std::to_string(cap));
            } else {
                g = complement(load_graph(file));
            }
            std::cout << (as_graph6 ? to_graph6(g) + "\n" : to_edge_list(g));
            return ok;
        }
        if (*verify_cmd) {
            suite_opts.solver = solver_options(budget_flag);
            auto report = run_suite(suite, max_order, suite_opts);
            auto body = to_json(report);
            write_file(out_dir, "report-" + report.suite + ".json", body.dump(2) + "\n");
            std::cout << body.dump() << '\n';
            if (!report.complete) return budget;
            return report.failures.empty() ? ok : suite_failed;
        }
        if (*scan_cmd) {
            KneserScanOptions opts;
            opts.solver = solver_options(budget_flag);
            opts.vertex_cap = scan_cap;
            auto csv = to_csv(kneser_scan(max_n, complement_family, opts));
            write_file(out_dir, "kneser-scan.csv", csv);
            std::cout << csv;
            return ok;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return budget;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return budget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return invalid;
    }
    return invalid;
}
