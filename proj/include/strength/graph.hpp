#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strength/vertex_set.hpp"

namespace strength {

/// Generators refuse to build graphs with more vertices than this unless told otherwise.
inline constexpr std::size_t default_vertex_cap = 64;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..order()-1 with bitset adjacency.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of the given order.
    explicit Graph(std::size_t order);
    /// Throws ValidationError on loops or out-of-range endpoints. Duplicate edges collapse.
    Graph(std::size_t order, std::span<const Edge> edges);

    /// Rows must be symmetric and loop-free; throws ValidationError otherwise.
    static Graph from_adjacency(std::vector<VertexSet> rows);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool has_edges() const noexcept { return edge_count_ > 0; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return adj_[v]; }
    std::size_t degree(Vertex v) const noexcept { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// Vertex partition of a complete multipartite graph. `sizes` is sorted descending and
/// `assignment[v]` indexes into it.
struct MultipartiteParts {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> assignment;

    std::size_t part_count() const noexcept { return sizes.size(); }
    /// Vertices in part i, ascending.
    std::vector<Vertex> members(std::size_t part) const;
};

struct CompleteMultipartite {
    Graph graph;
    MultipartiteParts parts;
};

struct KneserParams {
    std::size_t n = 0; ///< ground set size
    std::size_t k = 0; ///< subset size

    /// Throws ValidationError unless 1 <= k <= n.
    void validate() const;
};

// Text formats. Vertices are 1-indexed in every format.

/// Header line "n <order>" followed by "u v" lines. Blank lines and lines starting with '#'
/// are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Short-form graph6 (order <= 62). Surrounding whitespace and a ">>graph6<<" header are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// True when the first non-blank line of `text` looks like graph6 rather than an edge list.
bool looks_like_graph6(std::string_view text);
/// Dispatches on looks_like_graph6.
Graph parse_graph(std::string_view text);

// Constructions.

Graph complement(const Graph& g);
Graph make_empty(std::size_t order);
Graph make_complete(std::size_t order);
Graph make_path(std::size_t order);
Graph make_cycle(std::size_t order);

/// Parts are laid out contiguously in the order given. Throws ValidationError on an empty list
/// or a zero size.
CompleteMultipartite gen_complete_multipartite(std::span<const std::size_t> sizes);

/// Vertices are the k-subsets of {1..n} in lexicographic order, adjacent when disjoint.
/// Throws ResourceError when C(n,k) exceeds `vertex_cap`.
Graph gen_kneser(const KneserParams& p, std::size_t vertex_cap = default_vertex_cap);
/// The k-subsets labelling gen_kneser's vertices, 1-based elements.
std::vector<std::vector<std::size_t>> kneser_subsets(const KneserParams& p);

/// C(n,k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k) noexcept;

// Elementary properties.

/// Throws ValidationError for the order-0 graph.
std::size_t min_degree(const Graph& g);
/// Graphs of order 0 or 1 count as connected.
bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by lowest member.
std::vector<VertexSet> components(const Graph& g);

} // namespace strength
