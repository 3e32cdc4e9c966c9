#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "strength/graph.hpp"

namespace strength {

/// Two-colouring with |side_u| >= |side_w|. On ties U holds the lowest-indexed vertex.
struct Bipartition {
    VertexSet side_u;
    VertexSet side_w;

    std::size_t m() const noexcept { return side_u.count(); }
    std::size_t n_small() const noexcept { return side_w.count(); }
};

/// Edges are stored as (u, w) with u in side U and w in side W when built from a bipartition.
struct Matching {
    std::vector<Edge> edges;

    std::size_t size() const noexcept { return edges.size(); }
};

struct IndependentSetWitness {
    VertexSet vertices;

    std::size_t size() const noexcept { return vertices.count(); }
};

enum class Traversal { breadth_first, depth_first };

inline constexpr std::uint64_t default_independence_budget = 10'000'000;

std::optional<Bipartition> bipartition(const Graph& g, Traversal order = Traversal::breadth_first);

/// True when b covers V disjointly and every edge crosses it.
bool is_valid_bipartition(const Graph& g, const Bipartition& b);

/// Exact maximum independent set by branch and bound. Throws ResourceError when more than
/// `node_budget` search nodes are needed.
IndependentSetWitness independence_number(const Graph& g,
                                          std::uint64_t node_budget = default_independence_budget);

/// Maximum matching via augmenting paths. Throws ValidationError if b is not a bipartition of g.
Matching max_bipartite_matching(const Graph& g, const Bipartition& b);

/// True when some matching covers every vertex of the smaller side.
bool has_saturating_matching(const Graph& g, const Bipartition& b);

/// For a connected bipartite graph with at least one edge and a matching saturating the smaller
/// side, the independence number is the larger side's size. Absent when any hypothesis fails.
std::optional<std::size_t> beta_via_saturating_matching(const Graph& g);

/// Parts of g when g is complete multipartite, i.e. non-adjacency is an equivalence relation.
std::optional<MultipartiteParts> recognize_complete_multipartite(const Graph& g);

bool is_complete_bipartite(const Graph& g, const Bipartition& b);

} // namespace strength
