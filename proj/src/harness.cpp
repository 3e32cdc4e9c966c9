#include "strength/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "strength/bounds.hpp"
#include "strength/error.hpp"
#include "strength/invariants.hpp"

namespace strength {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::string_view unknown_strength = "unknown(budget)";

std::vector<Edge> vertex_pairs(std::size_t order) {
    std::vector<Edge> pairs;
    for (Vertex v = 1; v < order; ++v)
        for (Vertex u = 0; u < v; ++u) pairs.push_back({u, v});
    return pairs;
}

Graph graph_from_mask(std::size_t order, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    return Graph(order, edges);
}

std::string show(const StrengthValue& v) {
    if (auto p = std::get_if<std::size_t>(&v)) return std::to_string(*p);
    return "infinity";
}

std::string show(const StrengthResult& r) {
    return show(r.value());
}

struct Tally {
    std::uint64_t checked = 0;
    std::vector<SuiteFailure> failures;

    void fail(const Graph& g, std::string expected, std::string actual) {
        failures.push_back({to_graph6(g), std::move(expected), std::move(actual)});
    }
};

// Distributes instance indices over a worker pool and merges per-worker tallies. A budget hit
// in any worker stops the run and marks the report incomplete.
class SuiteRunner {
public:
    explicit SuiteRunner(unsigned threads)
        : threads_(threads ? threads : std::max(1U, std::thread::hardware_concurrency())) {}

    bool stopped() const noexcept { return stop_.load(); }

    template <typename F>
    void parallel_for(std::uint64_t count, F&& fn) {
        if (stopped() || count == 0) return;
        constexpr std::uint64_t chunk = 256;
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            Tally local;
            try {
                while (!stopped()) {
                    auto begin = next.fetch_add(chunk);
                    if (begin >= count) break;
                    auto end = std::min(count, begin + chunk);
                    for (auto i = begin; i < end && !stopped(); ++i) fn(i, local);
                }
            } catch (const ResourceError& e) {
                std::lock_guard lock(mutex_);
                if (!stop_.exchange(true)) note_ = e.what();
            }
            std::lock_guard lock(mutex_);
            total_.checked += local.checked;
            for (auto& f : local.failures) total_.failures.push_back(std::move(f));
        };
        const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads_, (count + chunk - 1) / chunk));
        if (n <= 1) {
            worker();
            return;
        }
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    VerificationReport finish(std::string_view suite, std::size_t max_order, Clock::time_point start) {
        VerificationReport r;
        r.suite = std::string(suite);
        r.max_order = max_order;
        r.instances_checked = total_.checked;
        r.failures = std::move(total_.failures);
        std::sort(r.failures.begin(), r.failures.end());
        r.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
        r.complete = !stopped();
        if (!r.complete) r.note = "stopped after " + std::to_string(r.instances_checked) + " instances: " + note_;
        return r;
    }

private:
    unsigned threads_;
    std::atomic<bool> stop_{false};
    std::mutex mutex_;
    std::string note_;
    Tally total_;
};

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

// Colourings of vertices 1..order-1 (vertex 0 fixed on side A) with the cross pairs they allow.
struct Colouring {
    std::vector<Edge> cross;
};

std::vector<Colouring> colourings(std::size_t order) {
    std::vector<Colouring> out;
    if (order == 0) return out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << (order - 1)); ++c) {
        Colouring col;
        auto side = [&](Vertex v) { return v == 0 ? 0U : static_cast<unsigned>((c >> (v - 1)) & 1U); };
        for (Vertex v = 1; v < order; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (side(u) != side(v)) col.cross.push_back({u, v});
        out.push_back(std::move(col));
    }
    return out;
}

// Runs `check` on every connected bipartite labelled graph of orders 2..max_order.
template <typename F>
void over_connected_bipartite(SuiteRunner& run, std::size_t max_order, F&& check) {
    for (std::size_t order = 2; order <= max_order; ++order) {
        for (const auto& col : colourings(order)) {
            run.parallel_for(std::uint64_t{1} << col.cross.size(), [&](std::uint64_t mask, Tally& t) {
                Graph g = graph_from_mask(order, col.cross, mask);
                if (is_connected(g)) check(g, t);
            });
        }
    }
}

void sandwich_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions&) {
    for (std::size_t order = 2; order <= max_order; ++order) {
        const auto pairs = vertex_pairs(order);
        run.parallel_for(labeled_graph_count(order), [&](std::uint64_t mask, Tally& t) {
            if (mask == 0) return;
            Graph g = graph_from_mask(order, pairs, mask);
            auto report = bounds_report(g);
            auto exact = strength_oracle(g).finite_value();
            ++t.checked;
            if (exact < report.best_lb || exact > report.best_ub)
                t.fail(g, "[" + std::to_string(report.best_lb) + "," + std::to_string(report.best_ub) + "]",
                       std::to_string(exact));
            // The two independence bounds meet only when beta = 1, i.e. for complete graphs.
            const bool complete = g.edge_count() == order * (order - 1) / 2;
            if ((report.lb_beta == report.ub_beta) != complete)
                t.fail(g, complete ? "lb_beta == ub_beta" : "lb_beta < ub_beta",
                       std::to_string(report.lb_beta) + " vs " + std::to_string(report.ub_beta));
        });
    }
}

void oracle_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    auto compare = [&](const Graph& g, Tally& t) {
        auto exact = strength_exact(g, opts.solver);
        auto oracle = strength_oracle(g);
        ++t.checked;
        if (exact.value() != oracle.value()) t.fail(g, show(oracle), show(exact));
    };
    for (std::size_t order = 1; order <= max_order; ++order) {
        const auto pairs = vertex_pairs(order);
        run.parallel_for(labeled_graph_count(order), [&](std::uint64_t mask, Tally& t) {
            Graph g = graph_from_mask(order, pairs, mask);
            if (is_connected(g)) compare(g, t);
        });
    }
    run.parallel_for(opts.random_samples, [&](std::uint64_t i, Tally& t) {
        auto rng = instance_rng(opts.seed, i);
        const std::size_t order = std::uniform_int_distribution<std::size_t>(8, 9)(rng);
        const double density = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
        std::bernoulli_distribution coin(density);
        std::vector<Edge> edges;
        for (Vertex v = 1; v < order; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (coin(rng)) edges.push_back({u, v});
        compare(Graph(order, edges), t);
    });
}

void lemma3_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    std::vector<std::vector<std::size_t>> instances;
    for (std::size_t total = 2; total <= max_order; ++total)
        for (auto& p : integer_partitions(total))
            if (p.size() >= 2) instances.push_back(std::move(p));

    run.parallel_for(instances.size(), [&](std::uint64_t i, Tally& t) {
        const auto& sizes = instances[i];
        auto [g, parts] = gen_complete_multipartite(sizes);
        ++t.checked;
        auto recognized = recognize_complete_multipartite(g);
        if (!recognized || recognized->sizes != sizes) {
            t.fail(g, "recognized as complete multipartite", "rejected or wrong parts");
            return;
        }
        const std::size_t n = g.order();
        const std::size_t via_degree = n + min_degree(g);
        const std::size_t via_beta = 2 * n - independence_number(g).size();
        if (via_degree != via_beta) {
            t.fail(g, "n+delta == 2n-beta", std::to_string(via_degree) + " != " + std::to_string(via_beta));
            return;
        }
        auto exact = strength_exact(g, opts.solver);
        if (exact.value() != StrengthValue{via_degree} || exact.certificate() != Certificate::bounds_coincide)
            t.fail(g, std::to_string(via_degree) + " bounds-coincide",
                   show(exact) + " " + std::string(to_string(exact.certificate())));
    });
}

void lemma5_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    over_connected_bipartite(run, max_order, [&](const Graph& g, Tally& t) {
        auto bfs = bipartition(g, Traversal::breadth_first);
        auto dfs = bipartition(g, Traversal::depth_first);
        if (!bfs || !dfs) {
            t.fail(g, "bipartite", "no bipartition");
            return;
        }
        // A connected bipartite graph has one bipartition up to swapping sides.
        const bool same = (bfs->side_u == dfs->side_u && bfs->side_w == dfs->side_w) ||
                          (bfs->side_u == dfs->side_w && bfs->side_w == dfs->side_u);
        if (!same) t.fail(g, "unique bipartition", "traversals disagree");
        if (!has_saturating_matching(g, *bfs)) return;
        ++t.checked;
        auto via_matching = beta_via_saturating_matching(g);
        auto beta = independence_number(g, opts.solver.independence_budget).size();
        if (!via_matching || *via_matching != beta)
            t.fail(g, std::to_string(beta), via_matching ? std::to_string(*via_matching) : "absent");
    });
}

void thm6_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    over_connected_bipartite(run, max_order, [&](const Graph& g, Tally& t) {
        if (!matched_bipartite_gap(g)) return;
        ++t.checked;
        auto r = bounds_report(g, opts.solver.independence_budget);
        if (!r.lb_delta || *r.lb_delta >= r.ub_beta)
            t.fail(g, "lb_delta < ub_beta",
                   (r.lb_delta ? std::to_string(*r.lb_delta) : "absent") + " vs " + std::to_string(r.ub_beta));
    });
}

void thm7_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    if (max_order < 2) return;
    run.parallel_for(opts.thm7_instances, [&](std::uint64_t i, Tally& t) {
        auto rng = instance_rng(opts.seed, i);
        using Dist = std::uniform_int_distribution<std::size_t>;
        const std::size_t total = Dist(2, max_order)(rng);
        const std::size_t largest = Dist((total + 1) / 2, total - 1)(rng);
        std::vector<std::size_t> sizes{largest};
        for (std::size_t rest = total - largest; rest > 0;) {
            auto part = Dist(1, rest)(rng);
            sizes.push_back(part);
            rest -= part;
        }
        std::sort(sizes.begin() + 1, sizes.end(), std::greater<>{});

        std::vector<std::size_t> part_of;
        for (std::size_t p = 0; p < sizes.size(); ++p) part_of.insert(part_of.end(), sizes[p], p);
        std::bernoulli_distribution coin(0.5);
        std::vector<Edge> removed;
        for (Vertex v = largest; v < total; ++v)
            for (Vertex u = largest; u < v; ++u)
                if (part_of[u] != part_of[v] && coin(rng)) removed.push_back({u, v});

        auto built = construct_pruned_multipartite(sizes, removed, opts.solver);
        auto oracle = strength_oracle(built.graph);
        ++t.checked;
        if (built.result.value() != oracle.value()) t.fail(built.graph, show(oracle), show(built.result));
    });
}

void kn_complete_suite(SuiteRunner& run, std::size_t max_order, const SuiteOptions& opts) {
    if (max_order < 2) return;
    run.parallel_for(max_order - 1, [&](std::uint64_t i, Tally& t) {
        const std::size_t n = i + 2;
        Graph g = make_complete(n);
        auto r = strength_exact(g, opts.solver);
        ++t.checked;
        if (r.value() != StrengthValue{2 * n - 1}) t.fail(g, std::to_string(2 * n - 1), show(r));
    });
}

using SuiteFn = void (*)(SuiteRunner&, std::size_t, const SuiteOptions&);

struct SuiteEntry {
    std::string name;
    std::size_t cap;
    SuiteFn fn;
};

const std::vector<SuiteEntry>& suites() {
    static const std::vector<SuiteEntry> table{
        {"sandwich", 7, sandwich_suite},  {"lemma3", 9, lemma3_suite},
        {"lemma5", 7, lemma5_suite},      {"thm6", 8, thm6_suite},
        {"thm7", 9, thm7_suite},          {"kn-complete", 10, kn_complete_suite},
        {"oracle", 7, oracle_suite},
    };
    return table;
}

const SuiteEntry& find_suite(std::string_view name) {
    for (const auto& s : suites())
        if (s.name == name) return s;
    throw ValidationError("unknown suite '" + std::string(name) + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", lineno);
    out.push_back(std::move(cur));
    return out;
}

std::size_t csv_count(const std::string& s, std::size_t lineno) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("expected a count, got '" + s + "'", lineno);
    return std::stoull(s);
}

StrengthValue csv_bound(const std::string& s, std::size_t lineno) {
    if (s == "infinity") return Infinity{};
    return csv_count(s, lineno);
}

ExperimentRow experiment_row(std::string id, const Graph& g, const SolverOptions& solver) {
    ExperimentRow row;
    row.id = std::move(id);
    row.n = g.order();
    if (!g.has_edges()) {
        row.delta = g.order() ? min_degree(g) : 0;
        row.beta = g.order();
        row.lb = row.ub = Infinity{};
        row.str = Infinity{};
        row.certificate = std::string(to_string(Certificate::infinite));
        return row;
    }
    auto report = bounds_report(g, solver.independence_budget);
    row.delta = report.delta;
    row.beta = report.beta;
    row.lb = report.best_lb;
    row.ub = report.best_ub;
    try {
        auto result = strength_exact(g, solver);
        row.str = result.finite_value();
        row.certificate = std::string(to_string(result.certificate()));
    } catch (const ResourceError&) {
        row.str = Unknown{};
        row.certificate = "budget";
    }
    return row;
}

} // namespace

std::uint64_t labeled_graph_count(std::size_t order) {
    if (order * (order - (order ? 1 : 0)) / 2 >= 64)
        throw ResourceError("labelled graph masks are limited to order 11");
    return std::uint64_t{1} << (order * (order - (order ? 1 : 0)) / 2);
}

Graph labeled_graph(std::size_t order, std::uint64_t mask) {
    if (order * (order - (order ? 1 : 0)) / 2 > 64)
        throw ResourceError("labelled graph masks are limited to order 11");
    return graph_from_mask(order, vertex_pairs(order), mask);
}

void enumerate_graphs(std::size_t order, bool connected_only, const std::function<void(const Graph&)>& visit) {
    if (order > enumeration_max_order)
        throw ResourceError("exhaustive enumeration is limited to order " + std::to_string(enumeration_max_order) +
                            "; supply a graph6 file for larger orders");
    const auto pairs = vertex_pairs(order);
    const auto count = labeled_graph_count(order);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Graph g = graph_from_mask(order, pairs, mask);
        if (!connected_only || is_connected(g)) visit(g);
    }
}

void enumerate_graphs(std::istream& graph6, bool connected_only, const std::function<void(const Graph&)>& visit) {
    for (const auto& g : read_graph6_stream(graph6))
        if (!connected_only || is_connected(g)) visit(g);
}

void enumerate_connected_bipartite(std::size_t order, const std::function<void(const Graph&)>& visit) {
    if (order == 1) {
        visit(Graph(1));
        return;
    }
    for (const auto& col : colourings(order)) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << col.cross.size()); ++mask) {
            Graph g = graph_from_mask(order, col.cross, mask);
            if (is_connected(g)) visit(g);
        }
    }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> integer_partitions(std::size_t total) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto& self, std::size_t left, std::size_t max_part) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    if (total > 0) rec(rec, total, total);
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : suites()) v.push_back(s.name);
        return v;
    }();
    return names;
}

std::size_t suite_cap(std::string_view name) {
    return find_suite(name).cap;
}

VerificationReport run_suite(std::string_view name, std::size_t max_order, const SuiteOptions& opts) {
    const auto& suite = find_suite(name);
    if (max_order > suite.cap)
        throw ValidationError("suite '" + suite.name + "' accepts max order up to " + std::to_string(suite.cap) +
                              ", got " + std::to_string(max_order));
    const auto start = Clock::now();
    SuiteRunner run(opts.threads);
    suite.fn(run, max_order, opts);
    return run.finish(suite.name, max_order, start);
}

std::vector<ExperimentRow> kneser_scan(std::size_t max_n, bool complement_family, const KneserScanOptions& opts) {
    std::vector<ExperimentRow> rows;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            const bool admissible = complement_family ? (n >= 2 * k && k >= 2) : (n >= 2 * k || n == k + 1);
            if (!admissible || binomial(n, k) > opts.vertex_cap) continue;
            Graph g = gen_kneser({n, k}, opts.vertex_cap);
            std::string id = "KG(" + std::to_string(n) + "," + std::to_string(k) + ")";
            if (complement_family) {
                g = complement(g);
                id = "co-" + id;
            }
            rows.push_back(experiment_row(std::move(id), g, opts.solver));
        }
    }
    return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out << experiment_csv_header << '\n';
    for (const auto& r : rows) {
        std::string str;
        if (auto p = std::get_if<std::size_t>(&r.str))
            str = std::to_string(*p);
        else if (std::holds_alternative<Infinity>(r.str))
            str = "infinity";
        else
            str = std::string(unknown_strength);
        out << csv_field(r.id) << ',' << r.n << ',' << r.delta << ',' << r.beta << ',' << show(r.lb) << ','
            << show(r.ub) << ',' << str << ',' << csv_field(r.certificate) << '\n';
    }
    return out.str();
}

std::vector<ExperimentRow> parse_experiment_csv(std::string_view text) {
    std::vector<ExperimentRow> rows;
    std::size_t lineno = 0;
    bool header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != experiment_csv_header) throw ParseError("unexpected CSV header", lineno);
            header = true;
            continue;
        }
        auto f = split_csv_line(line, lineno);
        if (f.size() != 8) throw ParseError("expected 8 fields, got " + std::to_string(f.size()), lineno);
        ExperimentRow r;
        r.id = f[0];
        r.n = csv_count(f[1], lineno);
        r.delta = csv_count(f[2], lineno);
        r.beta = csv_count(f[3], lineno);
        r.lb = csv_bound(f[4], lineno);
        r.ub = csv_bound(f[5], lineno);
        if (f[6] == "infinity")
            r.str = Infinity{};
        else if (f[6] == unknown_strength)
            r.str = Unknown{};
        else
            r.str = csv_count(f[6], lineno);
        r.certificate = f[7];
        rows.push_back(std::move(r));
    }
    if (!header) throw ParseError("missing CSV header");
    return rows;
}

} // namespace strength
