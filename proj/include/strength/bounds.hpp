#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "strength/graph.hpp"
#include "strength/invariants.hpp"

namespace strength {

/// Every known bound on the strength of a graph with at least one edge.
///
/// lb_delta = n + delta (only when delta >= 1), lb_beta = 2n - 2*beta + 1,
/// ub_beta = 2n - beta, and the trivial window [3, 2n - 1]. The *_source fields name the
/// field that attains best_lb / best_ub.
struct BoundsReport {
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t beta = 0;
    std::size_t lb_trivial = 3;
    std::optional<std::size_t> lb_delta;
    std::size_t lb_beta = 0;
    std::size_t ub_beta = 0;
    std::size_t ub_trivial = 0;
    std::size_t best_lb = 0;
    std::size_t best_ub = 0;
    bool coincide = false;
    std::string best_lb_source;
    std::string best_ub_source;

    /// Maximum independent set behind `beta`.
    IndependentSetWitness independent_set;
};

/// Throws DomainError for edgeless graphs, whose strength is +infinity by convention.
BoundsReport bounds_report(const Graph& g, std::uint64_t independence_budget = default_independence_budget);

/// For a complete multipartite graph with at least two parts, n + delta and 2n - beta agree and
/// pin the strength. Absent for anything else. Throws std::logic_error if the two disagree.
std::optional<std::size_t> multipartite_coincidence(const Graph& g);

/// True when g is connected, bipartite, not complete bipartite, and has a matching saturating
/// its smaller side. For such graphs n + delta < 2n - beta, so the bounds cannot meet.
bool matched_bipartite_gap(const Graph& g);

} // namespace strength
