#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/products.hpp"
#include "reklab/rng.hpp"
#include "test_util.hpp"

using namespace reklab;

TEST_CASE("degree extrema") {
    CHECK(min_degree(gen::cycle(7)) == 2);
    CHECK(max_degree(gen::cycle(7)) == 2);
    CHECK(min_degree(gen::star(5)) == 1);
    CHECK(max_degree(gen::star(5)) == 4);

    const Graph sub_k4 = gen::subdivided_complete(4, 0);
    CHECK(min_degree(sub_k4) == 2);
    CHECK(max_degree(sub_k4) == 3);

    CHECK_THROWS_AS(min_degree(Graph{}), input_error);
}

TEST_CASE("xi on standard families") {
    CHECK(xi(gen::cycle(6)) == 2);
    CHECK(xi(gen::complete(5)) == 6); // 2n - 4
    CHECK(xi(gen::complete(7)) == 10);
    CHECK_FALSE(xi(Graph::from_edge_list(3, {})).has_value());

    // subdivided K4: no edge joins two minimum-degree vertices, xi = 3 > 2*delta - 2
    const Graph sub_k4 = gen::subdivided_complete(4, 0);
    long long by_hand = 1000;
    for (const auto& [u, v] : sub_k4.to_edge_list())
        by_hand = std::min<long long>(by_hand, sub_k4.degree(u) + sub_k4.degree(v) - 2);
    CHECK(by_hand == 3);
    CHECK(xi(sub_k4) == 3);
}

TEST_CASE("connected triples cover paths and triangles") {
    const auto triples = connected_triples(gen::cycle(4));
    CHECK(triples.size() == 4); // the four arcs; no triangles
    const auto k4_triples = connected_triples(gen::complete(4));
    CHECK(k4_triples.size() == 4); // every 3-subset

    // triples through a vertex match the filtered full enumeration
    const Graph h = gen::harary(3, 8);
    auto through = connected_triples_through(h, 0);
    std::vector<std::array<int, 3>> expect;
    for (const auto& t : connected_triples(h))
        if (t[0] == 0 || t[1] == 0 || t[2] == 0) expect.push_back(t);
    CHECK(through == expect);
}

TEST_CASE("xi3 on standard families") {
    REQUIRE(xi3(gen::cycle(6)).has_value());
    CHECK(xi3(gen::cycle(6))->value == 2);
    CHECK(xi3(gen::complete(5))->value == 6);
    CHECK_FALSE(xi3(gen::complete(2)).has_value());
    CHECK_FALSE(xi3(Graph::from_edge_list(5, {{0, 1}, {2, 3}})).has_value());

    // edge-seeded enumeration agrees with the full 3-subset scan
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(8));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(3) == 0) edges.emplace_back(u, v);
        const Graph g = Graph::from_edge_list(n, edges);
        const auto fast = xi3(g);
        const auto brute = testutil::brute_xi3(g);
        CHECK(fast.has_value() == brute.has_value());
        if (fast && brute) {
            CHECK(fast->value == *brute);
            CHECK(triple_boundary(g, fast->triple) == fast->value);
        }
    }
}

TEST_CASE("xi is at least 2*delta - 2") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2) == 0) edges.emplace_back(u, v);
        const Graph g = Graph::from_edge_list(n, edges);
        if (const auto x = xi(g)) CHECK(*x >= 2 * min_degree(g) - 2);
    }
}

TEST_CASE("xi3 strong cycle closed form") {
    CHECK(xi3_strong_cycle_formula(2, 2) == 18);
    CHECK(xi3_strong_cycle_formula(2, 3) == 20);
    CHECK(xi3_strong_cycle_formula(4, 6) == 36);
    CHECK_THROWS_AS(xi3_strong_cycle_formula(2, 1), input_error);
    CHECK_THROWS_AS(xi3_strong_cycle_formula(1, 2), input_error);

    // enumerated xi3 of C5 x C4 matches the delta = 2, xi = 2*delta - 2 branch
    const auto product = strong_product(gen::cycle(5), gen::cycle(4));
    REQUIRE(xi3(product.graph()).has_value());
    CHECK(xi3(product.graph())->value == 18);
    CHECK(xi3(product.graph())->value == xi3_strong_cycle_formula(2, 2));
}

TEST_CASE("xi3 of strong products with cycles matches the formula on corpus factors") {
    struct Factor {
        Graph g;
        const char* name;
    };
    const Factor factors[] = {
        {gen::cycle(5), "C5"},
        {gen::cycle(6), "C6"},
        {gen::harary(3, 6), "H(3,6)"},
        {gen::harary(4, 7), "H(4,7)"},
        {gen::subdivided_complete(4, 0), "subdivided K4"},
    };
    for (const auto& [g, name] : factors) {
        CAPTURE(name);
        REQUIRE(is_connected(g));
        const long long delta = min_degree(g);
        const auto x = xi(g);
        REQUIRE(x.has_value());
        for (int n : {4, 5}) {
            const auto product = strong_product(g, gen::cycle(n));
            const auto enumerated = xi3(product.graph());
            REQUIRE(enumerated.has_value());
            CHECK(enumerated->value == xi3_strong_cycle_formula(delta, *x));
        }
    }
}

TEST_CASE("xi3 of strong products with completes matches 3n*delta + 3n - 9") {
    for (int n : {4, 5}) {
        for (const Graph& g :
             {gen::cycle(5), gen::harary(3, 6), gen::complete(3), gen::path(3)}) {
            const long long delta = min_degree(g);
            const auto product = strong_product(g, gen::complete(n));
            const auto enumerated = xi3(product.graph());
            REQUIRE(enumerated.has_value());
            CHECK(enumerated->value == 3 * n * delta + 3 * n - 9);
        }
    }
}

TEST_CASE("degree profile JSON-facing struct") {
    const auto profile = degree_profile(gen::subdivided_complete(4, 0));
    CHECK(profile.min_degree == 2);
    CHECK(profile.max_degree == 3);
    CHECK(profile.xi == 3);
    REQUIRE(profile.xi3.has_value());
    CHECK(*profile.xi3 == testutil::brute_xi3(gen::subdivided_complete(4, 0)));
}
