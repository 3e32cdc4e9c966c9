#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strength/graph.hpp"
#include "strength/solver.hpp"

namespace strength {

// ---- Enumeration --------------------------------------------------------------------------

inline constexpr std::size_t enumeration_max_order = 7;

/// Number of labelled graphs on `order` vertices, 2^C(order,2).
std::uint64_t labeled_graph_count(std::size_t order);

/// Graph whose edge set is bit i of `mask` for the i-th pair in (0,1),(0,2),(1,2),(0,3),... order.
Graph labeled_graph(std::size_t order, std::uint64_t mask);

/// Visits every labelled graph of the given order exactly once. Throws ResourceError above
/// order 7.
void enumerate_graphs(std::size_t order, bool connected_only, const std::function<void(const Graph&)>& visit);

/// Visits the graphs of a graph6 stream (one per line), any order up to 62.
void enumerate_graphs(std::istream& graph6, bool connected_only, const std::function<void(const Graph&)>& visit);

/// Visits every connected bipartite labelled graph of the given order exactly once.
void enumerate_connected_bipartite(std::size_t order, const std::function<void(const Graph&)>& visit);

/// One graph per non-blank line of graph6 text.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Partitions of `total` into parts sorted descending.
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t total);

// ---- Verification suites ------------------------------------------------------------------

struct SuiteFailure {
    std::string graph6;
    std::string expected;
    std::string actual;

    auto operator<=>(const SuiteFailure&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::size_t max_order = 0;
    std::uint64_t instances_checked = 0;
    std::vector<SuiteFailure> failures; ///< sorted by graph6
    std::uint64_t elapsed_ms = 0;
    bool complete = true;  ///< false when a search budget stopped the run early
    std::string note;      ///< why the run is incomplete

    bool passed() const noexcept { return complete && failures.empty(); }
};

struct SuiteOptions {
    SolverOptions solver;
    unsigned threads = 0;            ///< 0 picks the hardware concurrency
    std::size_t random_samples = 1000; ///< oracle suite: random graphs at orders 8-9
    std::size_t thm7_instances = 250;
    std::uint64_t seed = 20231123;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// Largest max_order a suite accepts.
std::size_t suite_cap(std::string_view name);

/// Throws ValidationError for an unknown suite or a max_order above its cap.
VerificationReport run_suite(std::string_view name, std::size_t max_order, const SuiteOptions& opts = {});

// ---- Kneser experiments -------------------------------------------------------------------

/// Strength still open after the solver ran out of budget.
struct Unknown {
    bool operator==(const Unknown&) const = default;
};

struct ExperimentRow {
    std::string id;
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t beta = 0;
    StrengthValue lb = Infinity{};
    StrengthValue ub = Infinity{};
    std::variant<std::size_t, Infinity, Unknown> str = Unknown{};
    std::string certificate;

    bool operator==(const ExperimentRow&) const = default;
};

struct KneserScanOptions {
    SolverOptions solver;
    std::size_t vertex_cap = default_vertex_cap;
};

/// One row per admissible (n, k) with n <= max_n and C(n,k) <= vertex_cap. Kneser graphs use
/// n >= 2k plus the edgeless n = k + 1 family; complements use n >= 2k >= 4.
std::vector<ExperimentRow> kneser_scan(std::size_t max_n, bool complement, const KneserScanOptions& opts = {});

inline constexpr std::string_view experiment_csv_header = "id,n,delta,beta,lb,ub,str,certificate";

std::string to_csv(const std::vector<ExperimentRow>& rows);
/// Inverse of to_csv. Throws ParseError on malformed input.
std::vector<ExperimentRow> parse_experiment_csv(std::string_view text);

} // namespace strength
