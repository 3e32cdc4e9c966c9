#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strength/bounds.hpp"
#include "strength/error.hpp"
#include "strength/harness.hpp"
#include "strength/serialize.hpp"
#include "test_support.hpp"

using namespace strength;
using namespace strength::testing;

namespace {

Graph multipartite(std::initializer_list<std::size_t> sizes) {
    std::vector<std::size_t> v(sizes);
    return gen_complete_multipartite(v).graph;
}

} // namespace

TEST_CASE("bounds report examples") {
    SUBCASE("P4") {
        REQUIRE(brute_beta(make_path(4)) == 2);
        auto r = bounds_report(make_path(4));
        CHECK(r.n == 4);
        CHECK(r.delta == 1);
        CHECK(r.beta == 2);
        CHECK(r.lb_delta == 5u);
        CHECK(r.lb_beta == 5);
        CHECK(r.ub_beta == 6);
        CHECK(r.ub_trivial == 7);
        CHECK(r.best_lb == 5);
        CHECK(r.best_ub == 6);
        CHECK_FALSE(r.coincide);
    }
    SUBCASE("K4") {
        auto r = bounds_report(make_complete(4));
        CHECK(r.delta == 3);
        CHECK(r.beta == 1);
        CHECK(r.best_lb == 7);
        CHECK(r.best_ub == 7);
        CHECK(r.coincide);
    }
    SUBCASE("K_{2,3}") {
        auto r = bounds_report(multipartite({2, 3}));
        CHECK(r.n == 5);
        CHECK(r.delta == 2);
        CHECK(r.beta == 3);
        CHECK(r.lb_delta == 7u);
        CHECK(r.ub_beta == 7);
        CHECK(r.coincide);
        CHECK(r.best_lb_source == "lb_delta");
        CHECK(r.best_ub_source == "ub_beta");
    }
    SUBCASE("isolated vertex drops the degree bound") {
        // K3 plus an isolated vertex: delta = 0, beta = 2.
        auto r = bounds_report(graph_of(4, {{1, 2}, {2, 3}, {1, 3}}));
        CHECK_FALSE(r.lb_delta);
        CHECK(r.lb_beta == 5);
        CHECK(r.best_lb == 5);
        CHECK(r.best_lb_source == "lb_beta");
        CHECK(r.best_ub == 6);
    }
    SUBCASE("trivial floor") {
        // K2 plus four isolated vertices: beta = 5, lb_beta = 3.
        auto r = bounds_report(graph_of(6, {{1, 2}}));
        CHECK(r.lb_beta == 3);
        CHECK(r.best_lb == 3);
    }
    CHECK_THROWS_AS(bounds_report(make_empty(4)), DomainError);
    CHECK_THROWS_AS(bounds_report(Graph{}), DomainError);
}

TEST_CASE("bounds report JSON uses the documented field names") {
    auto j = to_json(bounds_report(make_path(4)));
    for (auto key : {"n", "delta", "beta", "lb_trivial", "lb_delta", "lb_beta", "ub_beta", "ub_trivial", "best_lb",
                     "best_ub", "coincide"})
        CHECK(j.contains(key));
    CHECK(j["lb_delta"] == 5);
    CHECK(j["coincide"] == false);
    auto iso = to_json(bounds_report(graph_of(3, {{1, 2}})));
    CHECK(iso["lb_delta"].is_null());
}

TEST_CASE("bounds hold on every small graph") {
    for (std::size_t order = 2; order <= 5; ++order)
        enumerate_graphs(order, false, [](const Graph& g) {
            if (!g.has_edges()) return;
            auto r = bounds_report(g);
            auto exact = brute_strength(g);
            REQUIRE(r.best_lb <= exact);
            REQUIRE(exact <= r.best_ub);
            REQUIRE(r.ub_beta <= r.ub_trivial);
            REQUIRE(r.best_lb <= r.best_ub);
            if (r.lb_delta) REQUIRE((*r.lb_delta >= r.lb_beta) == (2 * r.beta >= r.n - r.delta + 1));
            REQUIRE(r.coincide == (r.best_lb == r.best_ub));
        });
}

TEST_CASE("complete multipartite coincidence") {
    CHECK(multipartite_coincidence(multipartite({2, 3})) == 7u);
    CHECK(multipartite_coincidence(make_cycle(4)) == 6u);
    CHECK_FALSE(multipartite_coincidence(make_path(4)));
    CHECK_FALSE(multipartite_coincidence(make_empty(3)));
    CHECK(multipartite_coincidence(make_complete(5)) == 9u);

    for (std::size_t total = 2; total <= 9; ++total)
        for (const auto& p : integer_partitions(total)) {
            if (p.size() < 2) continue;
            auto g = gen_complete_multipartite(p).graph;
            auto r = bounds_report(g);
            REQUIRE(r.n + r.delta == 2 * r.n - r.beta);
            REQUIRE(multipartite_coincidence(g) == r.n + r.delta);
            REQUIRE(r.coincide);
        }
}

TEST_CASE("bipartite gap predicate") {
    auto c6 = make_cycle(6);
    CHECK(matched_bipartite_gap(c6));
    auto r = bounds_report(c6);
    CHECK(brute_beta(c6) == 3);
    CHECK(r.lb_delta == 8u);
    CHECK(r.ub_beta == 9);

    CHECK_FALSE(matched_bipartite_gap(multipartite({3, 3})));
    CHECK_FALSE(matched_bipartite_gap(make_cycle(5)));
    CHECK_FALSE(matched_bipartite_gap(graph_of(4, {{1, 2}, {3, 4}}))); // disconnected

    SUBCASE("strict gap whenever the predicate holds") {
        std::size_t hits = 0;
        for (std::size_t order = 2; order <= 7; ++order)
            enumerate_connected_bipartite(order, [&](const Graph& g) {
                if (!matched_bipartite_gap(g)) return;
                ++hits;
                auto rep = bounds_report(g);
                REQUIRE(rep.lb_delta);
                REQUIRE(*rep.lb_delta < rep.ub_beta);
                REQUIRE_FALSE(rep.coincide);
            });
        CHECK(hits > 1000);
    }
}
