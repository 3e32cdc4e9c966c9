#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strength/bounds.hpp"
#include "strength/error.hpp"
#include "strength/graph.hpp"

namespace strength {

/// Bijection from vertices to labels 1..n.
class Numbering {
public:
    /// Throws ValidationError unless `labels` is a permutation of 1..labels.size().
    explicit Numbering(std::vector<std::size_t> labels);

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t label(Vertex v) const noexcept { return labels_[v]; }
    std::span<const std::size_t> labels() const noexcept { return labels_; }

    bool operator==(const Numbering&) const = default;

private:
    std::vector<std::size_t> labels_;
};

/// Strength of an edgeless graph.
struct Infinity {
    bool operator==(const Infinity&) const = default;
};

using StrengthValue = std::variant<std::size_t, Infinity>;

enum class Certificate { bounds_coincide, solver, oracle, theorem7, multipartite, infinite };

std::string_view to_string(Certificate c) noexcept;
std::optional<Certificate> certificate_from_string(std::string_view s) noexcept;

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t ms = 0;
};

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000; ///< per feasibility call
    std::uint64_t independence_budget = default_independence_budget;
};

/// Exact strength with a witness numbering attaining it. Finite results are checked against
/// their witness on construction.
class StrengthResult {
public:
    /// Throws std::logic_error unless str_f(g, witness) == value.
    static StrengthResult finite(const Graph& g, std::size_t value, Numbering witness, Certificate cert,
                                 SearchStats stats = {});
    static StrengthResult infinite(SearchStats stats = {});

    const StrengthValue& value() const noexcept { return value_; }
    bool is_finite() const noexcept { return std::holds_alternative<std::size_t>(value_); }
    /// Throws DomainError for an infinite result.
    std::size_t finite_value() const;
    const std::optional<Numbering>& witness() const noexcept { return witness_; }
    Certificate certificate() const noexcept { return certificate_; }
    const SearchStats& stats() const noexcept { return stats_; }
    SearchStats& stats() noexcept { return stats_; }

private:
    StrengthResult(StrengthValue value, std::optional<Numbering> witness, Certificate cert, SearchStats stats)
        : value_(value), witness_(std::move(witness)), certificate_(cert), stats_(stats) {}

    StrengthValue value_;
    std::optional<Numbering> witness_;
    Certificate certificate_;
    SearchStats stats_;
};

/// Range [lower, upper] the strength is known to lie in when a search ran out of budget.
struct StrengthBracket {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

class BudgetExceeded : public ResourceError {
public:
    BudgetExceeded(const std::string& what, StrengthBracket bracket)
        : ResourceError(what), bracket_(bracket) {}

    const StrengthBracket& bracket() const noexcept { return bracket_; }

private:
    StrengthBracket bracket_;
};

inline constexpr std::size_t oracle_max_order = 9;

/// Largest label sum over the edges. Throws DomainError for edgeless graphs and
/// ValidationError when the numbering's order differs from the graph's.
std::size_t str_f(const Graph& g, const Numbering& f);

/// Exhaustive minimum over all numberings. Throws ResourceError above order 9.
StrengthResult strength_oracle(const Graph& g);

/// A numbering with every edge sum at most `s`, if one exists. Labels are placed from n
/// downwards. Throws ResourceError after opts.node_budget nodes. Adds nodes visited to `*nodes`.
std::optional<Numbering> feasible(const Graph& g, std::size_t s, const SolverOptions& opts = {},
                                  std::uint64_t* nodes = nullptr);

/// Bound coincidence when possible, otherwise the first feasible threshold from best_lb up.
/// Throws BudgetExceeded with the bracket still open.
StrengthResult strength_exact(const Graph& g, const SolverOptions& opts = {});

/// Labels `independent` with n, n-1, ... and the rest with 1, 2, ...; every edge sum is then at
/// most 2n - |independent|.
Numbering numbering_from_independent_set(const Graph& g, const VertexSet& independent);

/// Strength of a complete multipartite graph (at least two parts), certificate `multipartite`.
std::optional<StrengthResult> multipartite_strength(const Graph& g);

struct PrunedMultipartite {
    Graph graph;
    StrengthResult result;
};

/// Complete multipartite graph with `sizes` (descending, largest part at least the sum of the
/// rest) minus `removed`, whose edges must join two vertices outside the largest part.
/// Vertices are laid out part by part, largest first. The strength is 2n - sizes[0].
PrunedMultipartite construct_pruned_multipartite(std::span<const std::size_t> sizes,
                                                 std::span<const Edge> removed,
                                                 const SolverOptions& opts = {});

} // namespace strength
