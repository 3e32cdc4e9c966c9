#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strength/error.hpp"
#include "strength/harness.hpp"
#include "strength/serialize.hpp"
#include "strength/solver.hpp"
#include "test_support.hpp"

using namespace strength;
using namespace strength::testing;

namespace {

Graph multipartite(std::vector<std::size_t> sizes) {
    return gen_complete_multipartite(sizes).graph;
}

std::size_t value_of(const StrengthResult& r) {
    return r.finite_value();
}

} // namespace

TEST_CASE("numberings") {
    CHECK_NOTHROW(Numbering({2, 1, 3}));
    CHECK_THROWS_AS(Numbering({1, 1, 3}), ValidationError);
    CHECK_THROWS_AS(Numbering({0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(Numbering({1, 2, 4}), ValidationError);
}

TEST_CASE("str_f") {
    CHECK(str_f(make_complete(2), Numbering({1, 2})) == 3);
    CHECK(str_f(make_path(4), Numbering({4, 1, 2, 3})) == 5);

    std::vector<std::size_t> labels{1, 2, 3, 4};
    do {
        CHECK(str_f(make_complete(4), Numbering(labels)) == 7);
    } while (std::next_permutation(labels.begin(), labels.end()));

    CHECK_THROWS_AS(str_f(make_empty(3), Numbering({1, 2, 3})), DomainError);
    CHECK_THROWS_AS(str_f(make_path(3), Numbering({1, 2})), ValidationError);
}

TEST_CASE("exhaustive oracle") {
    CHECK(value_of(strength_oracle(make_complete(3))) == 5);
    REQUIRE(brute_strength(make_path(4)) == 5);
    CHECK(value_of(strength_oracle(make_path(4))) == 5);
    REQUIRE(brute_strength(make_cycle(5)) == 7);
    CHECK(value_of(strength_oracle(make_cycle(5))) == 7);
    CHECK(strength_oracle(make_cycle(5)).certificate() == Certificate::oracle);

    auto none = strength_oracle(make_empty(4));
    CHECK_FALSE(none.is_finite());
    CHECK(std::holds_alternative<Infinity>(none.value()));
    CHECK(none.certificate() == Certificate::infinite);
    CHECK_FALSE(none.witness());
    CHECK_THROWS_AS(none.finite_value(), DomainError);

    CHECK_THROWS_AS(strength_oracle(make_path(10)), ResourceError);

    SUBCASE("matches plain permutation enumeration") {
        for (std::size_t order = 2; order <= 5; ++order)
            enumerate_graphs(order, false, [](const Graph& g) {
                if (!g.has_edges()) return;
                REQUIRE(value_of(strength_oracle(g)) == brute_strength(g));
            });
        std::mt19937_64 rng(17);
        for (int i = 0; i < 20; ++i) {
            auto g = random_graph(7, 0.5, rng);
            if (g.has_edges()) REQUIRE(value_of(strength_oracle(g)) == brute_strength(g));
        }
    }
}

TEST_CASE("threshold feasibility") {
    auto c6 = make_cycle(6);
    REQUIRE(brute_strength(c6) == 8);
    // The cycle order (1,6,2,4,3,5) has sums 7,8,6,7,8,6.
    CHECK(str_f(c6, Numbering({1, 6, 2, 4, 3, 5})) == 8);
    auto w = feasible(c6, 8);
    REQUIRE(w);
    CHECK(str_f(c6, *w) <= 8);
    CHECK_FALSE(feasible(c6, 7));

    CHECK_FALSE(feasible(make_path(4), 4));
    REQUIRE(feasible(make_path(4), 5));

    auto k4 = feasible(make_complete(4), 7);
    REQUIRE(k4);
    CHECK(str_f(make_complete(4), *k4) == 7);
    CHECK_FALSE(feasible(make_complete(4), 6));

    SUBCASE("budget") {
        CHECK_THROWS_AS(feasible(gen_kneser({5, 2}), 13, SolverOptions{1, default_independence_budget}),
                        ResourceError);
    }

    SUBCASE("monotone in the threshold and exact at the strength") {
        for (std::size_t order = 2; order <= 6; ++order)
            enumerate_graphs(order, false, [&](const Graph& g) {
                if (!g.has_edges()) return;
                const auto exact = brute_strength(g);
                bool seen = false;
                for (std::size_t s = 3; s <= 2 * order; ++s) {
                    auto f = feasible(g, s);
                    if (f) REQUIRE(str_f(g, *f) <= s);
                    REQUIRE(f.has_value() == (s >= exact));
                    if (seen) REQUIRE(f);
                    seen = seen || f.has_value();
                }
            });
    }
}

TEST_CASE("exact strength") {
    auto k23 = strength_exact(multipartite({2, 3}));
    CHECK(value_of(k23) == 7);
    CHECK(k23.certificate() == Certificate::bounds_coincide);

    auto c6 = strength_exact(make_cycle(6));
    CHECK(value_of(c6) == 8);
    CHECK(c6.certificate() == Certificate::solver);

    // 14 is the brute-force minimum over all 10! numberings (computed offline).
    auto petersen = strength_exact(gen_kneser({5, 2}));
    CHECK(value_of(petersen) == 14);
    CHECK(petersen.certificate() == Certificate::solver);
    CHECK(str_f(gen_kneser({5, 2}), *petersen.witness()) == 14);

    CHECK(value_of(strength_exact(complement(make_cycle(4)))) == brute_strength(complement(make_cycle(4))));

    for (std::size_t n = 2; n <= 10; ++n) {
        auto r = strength_exact(make_complete(n));
        CHECK(value_of(r) == 2 * n - 1);
        CHECK(r.certificate() == Certificate::bounds_coincide);
    }

    auto inf = strength_exact(make_empty(5));
    CHECK_FALSE(inf.is_finite());
    CHECK(inf.certificate() == Certificate::infinite);
    for (std::size_t k = 2; k <= 5; ++k) CHECK_FALSE(strength_exact(gen_kneser({k + 1, k})).is_finite());

    SUBCASE("budget exhaustion keeps the open bracket") {
        try {
            strength_exact(gen_kneser({5, 2}), SolverOptions{2, default_independence_budget});
            FAIL("expected BudgetExceeded");
        } catch (const BudgetExceeded& e) {
            CHECK(e.bracket().lower == 13);
            CHECK(e.bracket().upper == 16);
        }
    }

    SUBCASE("agrees with the oracle and stays in range") {
        for (std::size_t order = 2; order <= 6; ++order)
            enumerate_graphs(order, false, [&](const Graph& g) {
                auto exact = strength_exact(g);
                auto oracle = strength_oracle(g);
                REQUIRE(exact.value() == oracle.value());
                if (exact.is_finite()) {
                    REQUIRE(value_of(exact) >= 3);
                    REQUIRE(value_of(exact) <= 2 * order - 1);
                    REQUIRE(str_f(g, *exact.witness()) == value_of(exact));
                }
            });
        std::mt19937_64 rng(23);
        for (int i = 0; i < 60; ++i) {
            auto g = random_graph(8 + i % 2, 0.2 + 0.1 * (i % 7), rng);
            REQUIRE(strength_exact(g).value() == strength_oracle(g).value());
        }
    }
}

TEST_CASE("strength result JSON") {
    auto j = to_json(strength_exact(make_path(4)));
    CHECK(j["value"] == 5);
    CHECK(j["certificate"] == "solver");
    CHECK(j["witness"].size() == 4);
    CHECK(j.contains("nodes"));
    CHECK(j.contains("ms"));
    auto inf = to_json(strength_exact(make_empty(3)));
    CHECK(inf["value"] == "infinity");
    CHECK(inf["certificate"] == "infinite");
    CHECK(inf["witness"].is_null());

    for (auto c : {Certificate::bounds_coincide, Certificate::solver, Certificate::oracle, Certificate::theorem7,
                   Certificate::multipartite, Certificate::infinite})
        CHECK(certificate_from_string(to_string(c)) == c);
    CHECK_FALSE(certificate_from_string("guess"));
}

TEST_CASE("witness checked on construction") {
    CHECK_THROWS_AS(StrengthResult::finite(make_path(4), 6, Numbering({4, 1, 2, 3}), Certificate::solver),
                    std::logic_error);
}

TEST_CASE("multipartite strength") {
    auto r = multipartite_strength(multipartite({3, 2, 1}));
    REQUIRE(r);
    CHECK(value_of(*r) == 9);
    CHECK(r->certificate() == Certificate::multipartite);
    CHECK_FALSE(multipartite_strength(make_path(4)));
    CHECK_FALSE(multipartite_strength(make_empty(4)));
}

TEST_CASE("pruned complete multipartite construction") {
    SUBCASE("removing the edge between two singletons gives K_{2,2}") {
        const std::size_t sizes[] = {2, 1, 1};
        const Edge removed[] = {{2, 3}};
        auto built = construct_pruned_multipartite(sizes, removed);
        CHECK(recognize_complete_multipartite(built.graph)->sizes == std::vector<std::size_t>{2, 2});
        CHECK(value_of(built.result) == 6);
        CHECK(built.result.certificate() == Certificate::theorem7);
    }
    SUBCASE("nothing removed") {
        const std::size_t sizes[] = {3, 2, 1};
        auto built = construct_pruned_multipartite(sizes, {});
        CHECK(value_of(built.result) == 9);
        CHECK(brute_strength(built.graph) == 9);
    }
    SUBCASE("both edges between the second and third parts removed") {
        const std::size_t sizes[] = {3, 2, 1};
        const Edge removed[] = {{3, 5}, {4, 5}};
        auto built = construct_pruned_multipartite(sizes, removed);
        CHECK(built.graph.edge_count() == 9);
        CHECK(value_of(built.result) == 9);
        CHECK(brute_strength(built.graph) == 9);
        CHECK(value_of(strength_oracle(built.graph)) == 9);
    }
    SUBCASE("hypothesis violations") {
        const std::size_t sizes[] = {3, 2, 1};
        const Edge touches_first[] = {{0, 3}};
        CHECK_THROWS_AS(construct_pruned_multipartite(sizes, touches_first), ValidationError);
        const Edge inside_part[] = {{3, 4}};
        CHECK_THROWS_AS(construct_pruned_multipartite(sizes, inside_part), ValidationError);
        const std::size_t unsorted[] = {2, 3};
        CHECK_THROWS_AS(construct_pruned_multipartite(unsorted, {}), ValidationError);
        const std::size_t too_small[] = {2, 2, 1};
        CHECK_THROWS_AS(construct_pruned_multipartite(too_small, {}), ValidationError);
        const std::size_t one_part[] = {4};
        CHECK_THROWS_AS(construct_pruned_multipartite(one_part, {}), ValidationError);
    }
}
