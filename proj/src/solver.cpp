#include "strength/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "strength/invariants.hpp"

namespace strength {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

constexpr std::array certificate_names{
    std::pair{Certificate::bounds_coincide, std::string_view{"bounds-coincide"}},
    std::pair{Certificate::solver, std::string_view{"solver"}},
    std::pair{Certificate::oracle, std::string_view{"oracle"}},
    std::pair{Certificate::theorem7, std::string_view{"theorem7"}},
    std::pair{Certificate::multipartite, std::string_view{"multipartite"}},
    std::pair{Certificate::infinite, std::string_view{"infinite"}},
};

// Enumerates label assignments vertex by vertex, skipping any prefix that already
// matches or exceeds the best maximum found. Vertices are visited by descending degree and the
// incumbent starts from the numbering that gives high-degree vertices small labels.
class ExhaustiveMinimizer {
public:
    explicit ExhaustiveMinimizer(const Graph& g)
        : n_(g.order()), order_(n_), earlier_(n_), labels_(n_, 0) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (g.adjacent(order_[i], order_[j])) earlier_[i].push_back(order_[j]);

        best_labels_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) best_labels_[order_[i]] = i + 1;
        best_ = 0;
        for (auto [u, v] : g.edges()) best_ = std::max(best_, best_labels_[u] + best_labels_[v]);
    }

    void run() { assign(0, 0); }

    std::size_t best() const noexcept { return best_; }
    const std::vector<std::size_t>& best_labels() const noexcept { return best_labels_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void assign(std::size_t depth, std::size_t current_max) {
        ++nodes_;
        if (depth == n_) {
            best_ = current_max;
            best_labels_ = labels_;
            return;
        }
        const Vertex v = order_[depth];
        for (std::size_t label = 1; label <= n_; ++label) {
            if (used_ >> label & 1U) continue;
            std::size_t m = current_max;
            for (Vertex u : earlier_[depth]) m = std::max(m, labels_[u] + label);
            if (m >= best_) continue;
            used_ |= std::uint64_t{1} << label;
            labels_[v] = label;
            assign(depth + 1, m);
            used_ &= ~(std::uint64_t{1} << label);
        }
        labels_[v] = 0;
    }

    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_; // neighbours visited before order_[i]
    std::vector<std::size_t> labels_;
    std::uint64_t used_ = 0;
    std::size_t best_ = 0;
    std::vector<std::size_t> best_labels_;
    std::uint64_t nodes_ = 0;
};

// Decides whether some numbering keeps every edge sum <= threshold. Labels are placed from n
// down; cap[v] is the largest label v may still take given its labelled neighbours.
class ThresholdSearch {
public:
    ThresholdSearch(const Graph& g, std::size_t threshold, std::uint64_t budget)
        : g_(g), n_(g.order()), threshold_(threshold), budget_(budget), labels_(n_, 0),
          cap_(n_, n_), counts_(n_ + 2, 0) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        // Twins (equal open or closed neighbourhoods) are interchangeable while both unlabelled.
        twin_of_.assign(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            Vertex a = order_[i];
            for (std::size_t j = 0; j < i; ++j) {
                Vertex b = order_[j];
                VertexSet na = g.neighbors(a), nb = g.neighbors(b);
                na.reset(b);
                nb.reset(a);
                if (na == nb) {
                    twin_of_[a] = b;
                    break;
                }
            }
        }
    }

    std::optional<Numbering> run() {
        if (n_ == 0) return Numbering({});
        if (!place(n_)) return std::nullopt;
        return Numbering(labels_);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    // Hall's condition for handing labels 1..remaining to the unlabelled vertices under their caps.
    bool labels_fit(std::size_t remaining) {
        std::fill(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(remaining) + 1, 0);
        for (Vertex v = 0; v < n_; ++v)
            if (!labels_[v]) ++counts_[std::min(cap_[v], remaining)];
        std::size_t at_most = counts_[0];
        if (at_most) return false;
        for (std::size_t t = 1; t <= remaining; ++t) {
            at_most += counts_[t];
            if (at_most > t) return false;
        }
        return true;
    }

    // Valid once no two unlabelled vertices can exceed the threshold together.
    void finish_by_caps(std::size_t remaining) {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n_; ++v)
            if (!labels_[v]) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return cap_[a] < cap_[b]; });
        for (std::size_t i = 0; i < remaining; ++i) labels_[rest[i]] = i + 1;
    }

    bool place(std::size_t label) {
        if (++nodes_ > budget_)
            throw ResourceError("feasibility search at threshold " + std::to_string(threshold_) +
                                " exceeded its budget of " + std::to_string(budget_) + " nodes");
        if (label == 0) return true;
        if (!labels_fit(label)) return false;
        if (2 * label - 1 <= threshold_) {
            finish_by_caps(label);
            return true;
        }

        const std::size_t partner_cap = threshold_ > label ? threshold_ - label : 0;
        std::vector<std::size_t> saved;
        for (Vertex v : order_) {
            if (labels_[v] || cap_[v] < label) continue;
            Vertex twin = twin_of_[v];
            if (twin != n_ && !labels_[twin] && cap_[twin] >= label) continue;

            labels_[v] = label;
            const auto& nb = g_.neighbors(v);
            saved.clear();
            for (Vertex u : nb) {
                saved.push_back(cap_[u]);
                if (!labels_[u]) cap_[u] = std::min(cap_[u], partner_cap);
            }
            bool ok = place(label - 1);
            if (ok) return true;
            std::size_t i = 0;
            for (Vertex u : nb) cap_[u] = saved[i++];
            labels_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t threshold_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> labels_;
    std::vector<std::size_t> cap_;
    std::vector<std::size_t> counts_;
    std::vector<Vertex> order_;
    std::vector<Vertex> twin_of_;
};

} // namespace

Numbering::Numbering(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
    std::vector<bool> seen(labels_.size() + 1, false);
    for (auto l : labels_) {
        if (l < 1 || l > labels_.size() || seen[l])
            throw ValidationError("numbering must assign each of 1.." + std::to_string(labels_.size()) +
                                  " exactly once");
        seen[l] = true;
    }
}

std::string_view to_string(Certificate c) noexcept {
    for (auto [cert, name] : certificate_names)
        if (cert == c) return name;
    return "unknown";
}

std::optional<Certificate> certificate_from_string(std::string_view s) noexcept {
    for (auto [cert, name] : certificate_names)
        if (name == s) return cert;
    return std::nullopt;
}

StrengthResult StrengthResult::finite(const Graph& g, std::size_t value, Numbering witness, Certificate cert,
                                      SearchStats stats) {
    if (cert == Certificate::infinite) throw std::logic_error("finite strength with an infinite certificate");
    if (str_f(g, witness) != value)
        throw std::logic_error("witness attains " + std::to_string(str_f(g, witness)) + ", not the claimed " +
                               std::to_string(value));
    return StrengthResult(value, std::move(witness), cert, stats);
}

StrengthResult StrengthResult::infinite(SearchStats stats) {
    return StrengthResult(Infinity{}, std::nullopt, Certificate::infinite, stats);
}

std::size_t StrengthResult::finite_value() const {
    if (!is_finite()) throw DomainError("strength is infinite");
    return std::get<std::size_t>(value_);
}

std::size_t str_f(const Graph& g, const Numbering& f) {
    if (f.order() != g.order())
        throw ValidationError("numbering has order " + std::to_string(f.order()) + " but the graph has " +
                              std::to_string(g.order()));
    if (!g.has_edges()) throw DomainError("graph has no edges; its strength is +infinity by convention");
    std::size_t best = 0;
    for (auto [u, v] : g.edges()) best = std::max(best, f.label(u) + f.label(v));
    return best;
}

StrengthResult strength_oracle(const Graph& g) {
    if (g.order() > oracle_max_order)
        throw ResourceError("the exhaustive oracle handles orders up to " + std::to_string(oracle_max_order) +
                            ", got " + std::to_string(g.order()));
    const auto start = Clock::now();
    if (!g.has_edges()) return StrengthResult::infinite({0, elapsed_ms(start)});
    ExhaustiveMinimizer search(g);
    search.run();
    return StrengthResult::finite(g, search.best(), Numbering(search.best_labels()), Certificate::oracle,
                                  {search.nodes(), elapsed_ms(start)});
}

std::optional<Numbering> feasible(const Graph& g, std::size_t s, const SolverOptions& opts, std::uint64_t* nodes) {
    ThresholdSearch search(g, s, opts.node_budget);
    auto cleanup = [&] {
        if (nodes) *nodes += search.nodes();
    };
    try {
        auto out = search.run();
        cleanup();
        return out;
    } catch (...) {
        cleanup();
        throw;
    }
}

Numbering numbering_from_independent_set(const Graph& g, const VertexSet& independent) {
    const std::size_t n = g.order();
    std::vector<std::size_t> labels(n, 0);
    std::size_t high = n;
    for (Vertex v : independent) labels[v] = high--;
    std::size_t low = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!labels[v]) labels[v] = low++;
    return Numbering(std::move(labels));
}

StrengthResult strength_exact(const Graph& g, const SolverOptions& opts) {
    const auto start = Clock::now();
    if (!g.has_edges()) return StrengthResult::infinite({0, elapsed_ms(start)});

    const auto report = bounds_report(g, opts.independence_budget);
    if (report.coincide)
        return StrengthResult::finite(g, report.best_ub, numbering_from_independent_set(g, report.independent_set.vertices),
                                      Certificate::bounds_coincide, {0, elapsed_ms(start)});

    std::uint64_t nodes = 0;
    for (std::size_t s = report.best_lb; s < report.best_ub; ++s) {
        std::optional<Numbering> found;
        try {
            found = feasible(g, s, opts, &nodes);
        } catch (const ResourceError& e) {
            throw BudgetExceeded(std::string(e.what()) + "; strength lies in [" + std::to_string(s) + ", " +
                                     std::to_string(report.best_ub) + "]",
                                 {s, report.best_ub});
        }
        if (found) return StrengthResult::finite(g, s, std::move(*found), Certificate::solver, {nodes, elapsed_ms(start)});
    }
    // Every threshold below the upper bound is infeasible; the independent-set numbering attains it.
    return StrengthResult::finite(g, report.best_ub, numbering_from_independent_set(g, report.independent_set.vertices),
                                  Certificate::solver, {nodes, elapsed_ms(start)});
}

std::optional<StrengthResult> multipartite_strength(const Graph& g) {
    const auto start = Clock::now();
    auto parts = recognize_complete_multipartite(g);
    if (!parts || parts->part_count() < 2) return std::nullopt;
    // The largest part is a maximum independent set.
    VertexSet largest(g.order());
    for (Vertex v : parts->members(0)) largest.set(v);
    const std::size_t value = 2 * g.order() - parts->sizes.front();
    return StrengthResult::finite(g, value, numbering_from_independent_set(g, largest), Certificate::multipartite,
                                  {0, elapsed_ms(start)});
}

PrunedMultipartite construct_pruned_multipartite(std::span<const std::size_t> sizes, std::span<const Edge> removed,
                                                 const SolverOptions& opts) {
    const auto start = Clock::now();
    if (sizes.size() < 2) throw ValidationError("need at least two parts");
    if (!std::is_sorted(sizes.begin(), sizes.end(), std::greater<>{}))
        throw ValidationError("part sizes must be sorted in descending order");
    const std::size_t rest = std::accumulate(sizes.begin() + 1, sizes.end(), std::size_t{0});
    if (sizes.front() < rest)
        throw ValidationError("the largest part must be at least the sum of the others");

    auto [complete, parts] = gen_complete_multipartite(sizes);
    const std::size_t n = complete.order();
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) rows.push_back(complete.neighbors(v));
    for (auto [u, v] : removed) {
        if (u >= n || v >= n) throw ValidationError("removed edge endpoint out of range");
        if (parts.assignment[u] == 0 || parts.assignment[v] == 0)
            throw ValidationError("removed edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                  " touches the largest part");
        if (!complete.adjacent(u, v))
            throw ValidationError("removed edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                  " is not an edge of the complete multipartite graph");
        rows[u].reset(v);
        rows[v].reset(u);
    }
    Graph pruned = Graph::from_adjacency(std::move(rows));

    const std::size_t value = 2 * n - sizes.front();
    std::uint64_t nodes = 0;
    auto witness = feasible(pruned, value, opts, &nodes);
    if (!witness) throw std::logic_error("no numbering reaches the certified strength " + std::to_string(value));
    auto result = StrengthResult::finite(pruned, value, std::move(*witness), Certificate::theorem7,
                                         {nodes, elapsed_ms(start)});
    return {std::move(pruned), std::move(result)};
}

} // namespace strength
