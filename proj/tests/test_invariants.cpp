#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strength/error.hpp"
#include "strength/harness.hpp"
#include "strength/invariants.hpp"
#include "test_support.hpp"

using namespace strength;
using namespace strength::testing;

namespace {

Graph k_mn(std::size_t m, std::size_t n) {
    const std::size_t sizes[] = {m, n};
    return gen_complete_multipartite(sizes).graph;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

// No augmenting path: every unmatched U vertex reaches only matched W vertices along
// alternating paths.
bool has_augmenting_path(const Graph& g, const Bipartition& b, const Matching& m) {
    const Vertex none = g.order();
    std::vector<Vertex> mate(g.order(), none);
    for (auto [u, w] : m.edges) mate[u] = w, mate[w] = u;
    for (Vertex start : b.side_u) {
        if (mate[start] != none) continue;
        VertexSet seen(g.order());
        std::vector<Vertex> stack{start};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (seen.test(w)) continue;
                seen.set(w);
                if (mate[w] == none) return true;
                stack.push_back(mate[w]);
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("bipartition") {
    auto c4 = bipartition(make_cycle(4));
    REQUIRE(c4);
    CHECK(c4->m() == 2);
    CHECK(c4->n_small() == 2);
    CHECK(c4->side_u.test(0)); // tie goes to the side with the lowest vertex

    CHECK_FALSE(bipartition(make_cycle(5)));

    auto k23 = bipartition(k_mn(2, 3));
    REQUIRE(k23);
    CHECK(k23->m() == 3);
    CHECK(k23->n_small() == 2);
    CHECK(is_valid_bipartition(k_mn(2, 3), *k23));

    SUBCASE("disconnected graphs report the larger aggregate side as U") {
        // Star K_{1,3} on 0..3 plus an isolated edge 4-5.
        auto g = graph_of(6, {{1, 2}, {1, 3}, {1, 4}, {5, 6}});
        auto b = bipartition(g);
        REQUIRE(b);
        CHECK(b->m() == 4);
        CHECK(b->n_small() == 2);
        CHECK(is_valid_bipartition(g, *b));
    }

    SUBCASE("connected bipartite graphs have one bipartition") {
        enumerate_connected_bipartite(6, [](const Graph& g) {
            auto a = bipartition(g, Traversal::breadth_first);
            auto d = bipartition(g, Traversal::depth_first);
            REQUIRE(a);
            REQUIRE(d);
            REQUIRE(a->side_u == d->side_u);
            REQUIRE(a->side_w == d->side_w);
        });
    }
}

TEST_CASE("independence number") {
    for (std::size_t n = 1; n <= 12; ++n) CHECK(independence_number(make_complete(n)).size() == 1);
    CHECK(brute_beta(make_cycle(5)) == 2);
    CHECK(independence_number(make_cycle(5)).size() == 2);
    CHECK(brute_beta(gen_kneser({5, 2})) == 4);
    CHECK(independence_number(gen_kneser({5, 2})).size() == 4);
    CHECK(independence_number(make_empty(7)).size() == 7);
    CHECK(independence_number(Graph{}).size() == 0);

    SUBCASE("exhaustive agreement on all labelled graphs of order <= 6") {
        for (std::size_t order = 1; order <= 6; ++order)
            enumerate_graphs(order, false, [](const Graph& g) {
                auto w = independence_number(g);
                REQUIRE(is_independent(g, w.vertices));
                REQUIRE(w.size() == brute_beta(g));
            });
    }

    SUBCASE("random graphs up to order 16") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 300; ++i) {
            auto g = random_graph(8 + i % 9, 0.2 + (i % 7) * 0.1, rng);
            auto w = independence_number(g);
            REQUIRE(is_independent(g, w.vertices));
            REQUIRE(w.size() == brute_beta(g));
        }
    }

    SUBCASE("budget") {
        std::mt19937_64 rng(9);
        auto g = random_graph(60, 0.1, rng);
        CHECK_THROWS_AS(independence_number(g, 3), ResourceError);
    }
}

TEST_CASE("bipartite matching") {
    auto k33 = k_mn(3, 3);
    CHECK(max_bipartite_matching(k33, *bipartition(k33)).size() == 3);

    auto p4 = make_path(4);
    CHECK(brute_max_matching(p4) == 2);
    CHECK(max_bipartite_matching(p4, *bipartition(p4)).size() == 2);

    auto star = k_mn(1, 4);
    CHECK(max_bipartite_matching(star, *bipartition(star)).size() == 1);

    SUBCASE("invalid bipartition is rejected") {
        auto b = *bipartition(p4);
        b.side_u.reset(b.side_u.first());
        CHECK_THROWS_AS(max_bipartite_matching(p4, b), ValidationError);
    }

    SUBCASE("maximum size and no augmenting path") {
        enumerate_connected_bipartite(6, [](const Graph& g) {
            auto b = *bipartition(g);
            auto m = max_bipartite_matching(g, b);
            std::vector<bool> used(g.order(), false);
            for (auto [u, w] : m.edges) {
                REQUIRE(g.adjacent(u, w));
                REQUIRE(b.side_u.test(u));
                REQUIRE_FALSE(used[u]);
                REQUIRE_FALSE(used[w]);
                used[u] = used[w] = true;
            }
            REQUIRE(m.size() == brute_max_matching(g));
            REQUIRE_FALSE(has_augmenting_path(g, b, m));
        });
    }
}

TEST_CASE("saturating matchings") {
    auto c6 = make_cycle(6);
    CHECK(has_saturating_matching(c6, *bipartition(c6)));
    auto star = k_mn(1, 4);
    CHECK(has_saturating_matching(star, *bipartition(star)));

    // u1 = 1, u2 = 2, w1..w3 = 3..5; the smaller side is {u1, u2}.
    auto g = graph_of(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}});
    auto b = *bipartition(g);
    CHECK(b.n_small() == 2);
    CHECK(b.side_w.test(0));
    CHECK(b.side_w.test(1));
    CHECK(brute_max_matching(g) == 2);
    CHECK(has_saturating_matching(g, b));

    // Small side {5,6,7}; 5 and 6 compete for their only neighbour 1.
    auto blocked = graph_of(7, {{5, 1}, {6, 1}, {7, 1}, {7, 2}, {7, 3}, {7, 4}});
    auto bb = *bipartition(blocked);
    CHECK(bb.n_small() == 3);
    CHECK(brute_max_matching(blocked) == 2);
    CHECK_FALSE(has_saturating_matching(blocked, bb));
}

TEST_CASE("independence number from a saturating matching") {
    CHECK(beta_via_saturating_matching(make_cycle(6)) == 3u);
    CHECK(beta_via_saturating_matching(k_mn(2, 3)) == 3u);
    CHECK(beta_via_saturating_matching(make_path(4)) == 2u);
    CHECK_FALSE(beta_via_saturating_matching(make_cycle(5)));
    CHECK_FALSE(beta_via_saturating_matching(Graph(1)));
    // Disconnected: 2K2.
    CHECK_FALSE(beta_via_saturating_matching(graph_of(4, {{1, 2}, {3, 4}})));

    SUBCASE("agrees with the exact independence number") {
        for (std::size_t order = 2; order <= 6; ++order)
            enumerate_connected_bipartite(order, [](const Graph& g) {
                auto via = beta_via_saturating_matching(g);
                if (via) REQUIRE(*via == brute_beta(g));
            });
    }
}

TEST_CASE("complete multipartite recognition") {
    auto c4 = recognize_complete_multipartite(make_cycle(4));
    REQUIRE(c4);
    CHECK(c4->sizes == std::vector<std::size_t>{2, 2});
    CHECK_FALSE(recognize_complete_multipartite(make_path(4)));
    CHECK(recognize_complete_multipartite(make_complete(5))->sizes == std::vector<std::size_t>(5, 1));
    CHECK(recognize_complete_multipartite(make_empty(3))->sizes == std::vector<std::size_t>{3});
    CHECK_FALSE(recognize_complete_multipartite(Graph{}));

    SUBCASE("recognizes every generated graph with the sorted sizes") {
        for (std::size_t total = 1; total <= 10; ++total)
            for (const auto& p : integer_partitions(total)) {
                // Feed the sizes ascending so the generator has to sort them.
                std::vector<std::size_t> ascending(p.rbegin(), p.rend());
                auto [g, parts] = gen_complete_multipartite(ascending);
                auto r = recognize_complete_multipartite(g);
                REQUIRE(r);
                REQUIRE(r->sizes == p);
                for (Vertex u = 0; u < g.order(); ++u)
                    for (Vertex v = u + 1; v < g.order(); ++v)
                        REQUIRE(g.adjacent(u, v) == (r->assignment[u] != r->assignment[v]));
            }
    }

    SUBCASE("rejects everything else") {
        std::size_t accepted = 0;
        enumerate_graphs(5, false, [&](const Graph& g) {
            // Complete multipartite iff the complement is a disjoint union of cliques.
            auto c = complement(g);
            bool cluster = true;
            for (const auto& comp : components(c)) {
                auto k = comp.count();
                std::size_t inner = 0;
                for (Vertex v : comp) inner += c.neighbors(v).intersection_count(comp);
                if (inner != k * (k - 1)) cluster = false;
            }
            REQUIRE(recognize_complete_multipartite(g).has_value() == cluster);
            accepted += cluster;
        });
        // Labelled set partitions of 5 elements: Bell(5) = 52.
        CHECK(accepted == 52);
    }
}
