#include "strength/bounds.hpp"

#include <stdexcept>

#include "strength/error.hpp"

namespace strength {

BoundsReport bounds_report(const Graph& g, std::uint64_t independence_budget) {
    if (!g.has_edges())
        throw DomainError("graph has no edges; its strength is +infinity by convention");

    BoundsReport r;
    r.n = g.order();
    r.delta = min_degree(g);
    r.independent_set = independence_number(g, independence_budget);
    r.beta = r.independent_set.size();

    r.lb_beta = 2 * r.n - 2 * r.beta + 1;
    r.ub_beta = 2 * r.n - r.beta;
    r.ub_trivial = 2 * r.n - 1;
    if (r.delta >= 1) r.lb_delta = r.n + r.delta;

    r.best_lb = r.lb_trivial;
    r.best_lb_source = "lb_trivial";
    if (r.lb_beta >= r.best_lb) {
        r.best_lb = r.lb_beta;
        r.best_lb_source = "lb_beta";
    }
    if (r.lb_delta && *r.lb_delta >= r.best_lb) {
        r.best_lb = *r.lb_delta;
        r.best_lb_source = "lb_delta";
    }

    if (r.ub_beta <= r.ub_trivial) {
        r.best_ub = r.ub_beta;
        r.best_ub_source = "ub_beta";
    } else {
        r.best_ub = r.ub_trivial;
        r.best_ub_source = "ub_trivial";
    }
    r.coincide = r.best_lb == r.best_ub;
    return r;
}

std::optional<std::size_t> multipartite_coincidence(const Graph& g) {
    auto parts = recognize_complete_multipartite(g);
    if (!parts || parts->part_count() < 2) return std::nullopt;

    const std::size_t n = g.order();
    const std::size_t via_degree = n + min_degree(g);
    const std::size_t via_beta = 2 * n - independence_number(g).size();
    if (via_degree != via_beta)
        throw std::logic_error("complete multipartite graph with n + delta != 2n - beta");
    return via_degree;
}

bool matched_bipartite_gap(const Graph& g) {
    if (!g.has_edges() || !is_connected(g)) return false;
    auto b = bipartition(g);
    return b && !is_complete_bipartite(g, *b) && has_saturating_matching(g, *b);
}

} // namespace strength
