#include "strength/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "strength/error.hpp"

namespace strength {

namespace {

constexpr int uncoloured = -1;

// Colours the component of `root` starting from colour 0. Returns false on an odd cycle.
bool colour_component(const Graph& g, Vertex root, Traversal order, std::vector<int>& colour) {
    std::deque<Vertex> work{root};
    colour[root] = 0;
    while (!work.empty()) {
        Vertex v;
        if (order == Traversal::breadth_first) {
            v = work.front();
            work.pop_front();
        } else {
            v = work.back();
            work.pop_back();
        }
        for (Vertex w : g.neighbors(v)) {
            if (colour[w] == uncoloured) {
                colour[w] = 1 - colour[v];
                work.push_back(w);
            } else if (colour[w] == colour[v]) {
                return false;
            }
        }
    }
    return true;
}

class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    VertexSet run() {
        best_ = greedy();
        best_size_ = best_.count();
        VertexSet chosen(g_.order());
        expand(chosen, 0, g_.vertices());
        return best_;
    }

private:
    // Min-degree greedy, used as the initial incumbent.
    VertexSet greedy() const {
        VertexSet chosen(g_.order());
        VertexSet left = g_.vertices();
        while (!left.empty()) {
            Vertex pick = left.first();
            std::size_t pick_deg = g_.neighbors(pick).intersection_count(left);
            for (Vertex v : left) {
                auto d = g_.neighbors(v).intersection_count(left);
                if (d < pick_deg) pick = v, pick_deg = d;
            }
            chosen.set(pick);
            left -= g_.neighbors(pick);
            left.reset(pick);
        }
        return chosen;
    }

    // Each clique holds at most one vertex of an independent set.
    std::size_t clique_cover(VertexSet left) const {
        std::size_t cliques = 0;
        while (!left.empty()) {
            Vertex v = left.first();
            left.reset(v);
            VertexSet extendable = left & g_.neighbors(v);
            while (!extendable.empty()) {
                Vertex w = extendable.first();
                left.reset(w);
                extendable.reset(w);
                extendable &= g_.neighbors(w);
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(VertexSet chosen, std::size_t size, VertexSet candidates) {
        if (++nodes_ > budget_)
            throw ResourceError("independence number search exceeded its budget of " +
                                std::to_string(budget_) + " nodes");

        // Vertices with at most one candidate neighbour belong to some maximum independent set.
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (Vertex v : candidates) {
                if (g_.neighbors(v).intersection_count(candidates) <= 1) {
                    chosen.set(v);
                    ++size;
                    candidates -= g_.neighbors(v);
                    candidates.reset(v);
                    reduced = true;
                    break;
                }
            }
        }

        if (candidates.empty()) {
            if (size > best_size_) {
                best_ = chosen;
                best_size_ = size;
            }
            return;
        }
        if (size + clique_cover(candidates) <= best_size_) return;

        Vertex pivot = candidates.first();
        std::size_t pivot_deg = 0;
        for (Vertex v : candidates) {
            auto d = g_.neighbors(v).intersection_count(candidates);
            if (d > pivot_deg) pivot = v, pivot_deg = d;
        }

        VertexSet with = chosen;
        with.set(pivot);
        expand(with, size + 1, candidates - g_.neighbors(pivot) - single(pivot));

        candidates.reset(pivot);
        expand(std::move(chosen), size, std::move(candidates));
    }

    VertexSet single(Vertex v) const {
        VertexSet s(g_.order());
        s.set(v);
        return s;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    VertexSet best_;
    std::size_t best_size_ = 0;
};

// Kuhn's augmenting path step from left vertex u.
bool augment(const Graph& g, Vertex u, const VertexSet& right, VertexSet& visited,
             std::vector<Vertex>& match_of_right, Vertex none) {
    for (Vertex w : g.neighbors(u) & right) {
        if (visited.test(w)) continue;
        visited.set(w);
        if (match_of_right[w] == none ||
            augment(g, match_of_right[w], right, visited, match_of_right, none)) {
            match_of_right[w] = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Bipartition> bipartition(const Graph& g, Traversal order) {
    const std::size_t n = g.order();
    std::vector<int> colour(n, uncoloured);
    for (Vertex v = 0; v < n; ++v)
        if (colour[v] == uncoloured && !colour_component(g, v, order, colour)) return std::nullopt;

    VertexSet zero(n), one(n);
    for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? zero : one).set(v);
    // Vertex 0 always receives colour 0, so ties keep the lowest-indexed vertex in U.
    if (one.count() > zero.count()) return Bipartition{std::move(one), std::move(zero)};
    return Bipartition{std::move(zero), std::move(one)};
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
    const std::size_t n = g.order();
    if (b.side_u.universe() != n || b.side_w.universe() != n) return false;
    if (b.side_u.intersects(b.side_w)) return false;
    if ((b.side_u | b.side_w).count() != n) return false;
    for (Vertex v : b.side_u)
        if (g.neighbors(v).intersects(b.side_u)) return false;
    for (Vertex v : b.side_w)
        if (g.neighbors(v).intersects(b.side_w)) return false;
    return true;
}

IndependentSetWitness independence_number(const Graph& g, std::uint64_t node_budget) {
    return {IndependentSetSearch(g, node_budget).run()};
}

Matching max_bipartite_matching(const Graph& g, const Bipartition& b) {
    if (!is_valid_bipartition(g, b)) throw ValidationError("not a bipartition of the graph");
    const Vertex none = g.order();
    std::vector<Vertex> match_of_right(g.order(), none);
    for (Vertex u : b.side_u) {
        VertexSet visited(g.order());
        augment(g, u, b.side_w, visited, match_of_right, none);
    }
    Matching m;
    for (Vertex w : b.side_w)
        if (match_of_right[w] != none) m.edges.push_back({match_of_right[w], w});
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

bool has_saturating_matching(const Graph& g, const Bipartition& b) {
    return max_bipartite_matching(g, b).size() == b.n_small();
}

bool is_complete_bipartite(const Graph& g, const Bipartition& b) {
    return g.edge_count() == b.m() * b.n_small();
}

std::optional<std::size_t> beta_via_saturating_matching(const Graph& g) {
    if (!g.has_edges() || !is_connected(g)) return std::nullopt;
    auto b = bipartition(g);
    if (!b || !has_saturating_matching(g, *b)) return std::nullopt;
    return b->m();
}

std::optional<MultipartiteParts> recognize_complete_multipartite(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return std::nullopt;

    std::vector<VertexSet> found;
    VertexSet unassigned = g.vertices();
    while (!unassigned.empty()) {
        Vertex v = unassigned.first();
        VertexSet part = ~g.neighbors(v);
        for (Vertex u : part)
            if (!unassigned.test(u) || ~g.neighbors(u) != part) return std::nullopt;
        unassigned -= part;
        found.push_back(std::move(part));
    }

    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return found[a].count() > found[b].count();
    });
    MultipartiteParts parts;
    parts.assignment.assign(n, 0);
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const auto& part = found[order[rank]];
        parts.sizes.push_back(part.count());
        for (Vertex u : part) parts.assignment[u] = rank;
    }
    return parts;
}

} // namespace strength
