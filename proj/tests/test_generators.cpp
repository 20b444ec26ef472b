#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reklab/connectivity.hpp"
#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/io.hpp"

using namespace reklab;

TEST_CASE("basic families") {
    const Graph c5 = gen::cycle(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(gen::complete(4).edge_count() == 6);
    CHECK(gen::path(1).edge_count() == 0);

    const Graph s5 = gen::star(5);
    CHECK(min_degree(s5) == 1);
    CHECK(s5.degree(0) == 4);
    CHECK_FALSE(has_3_restricted_cut(s5)); // no two non-center triples

    CHECK_THROWS_AS(gen::cycle(2), input_error);
    CHECK_THROWS_AS(gen::complete(0), input_error);
    CHECK_THROWS_AS(gen::star(0), input_error);
}

TEST_CASE("harary graphs are maximally edge-connected") {
    CHECK(gen::harary(2, 5).to_edge_list() == gen::cycle(5).to_edge_list());

    for (const auto& [k, n] : std::vector<std::pair<int, int>>{
             {2, 5}, {2, 8}, {3, 6}, {3, 8}, {4, 7}, {4, 9}, {5, 8}, {5, 10}}) {
        CAPTURE(k);
        CAPTURE(n);
        const Graph h = gen::harary(k, n);
        CHECK(min_degree(h) == k);
        CHECK(lambda(h) == k); // engine verification, not a construction promise
    }

    CHECK_THROWS_AS(gen::harary(1, 5), input_error);
    CHECK_THROWS_AS(gen::harary(3, 3), input_error);
    CHECK_THROWS_AS(gen::harary(3, 7), input_error); // odd * odd
}

TEST_CASE("circulants") {
    const Graph c = gen::circulant(8, {1, 2});
    for (int v = 0; v < 8; ++v) CHECK(c.degree(v) == 4);

    // offset n/2 gives a perfect matching; disconnected but valid output
    const Graph matching = gen::circulant(6, {3});
    CHECK(matching.edge_count() == 3);
    CHECK_FALSE(is_connected(matching));

    CHECK_THROWS_AS(gen::circulant(8, {0}), input_error);
    CHECK_THROWS_AS(gen::circulant(8, {5}), input_error);
}

TEST_CASE("random regular graphs") {
    const Graph a = gen::random_regular(10, 3, 7);
    const Graph b = gen::random_regular(10, 3, 7);
    CHECK(a.to_edge_list() == b.to_edge_list()); // determinism contract
    for (int v = 0; v < 10; ++v) CHECK(a.degree(v) == 3);

    const Graph other_seed = gen::random_regular(10, 3, 8);
    CHECK(other_seed.to_edge_list() != a.to_edge_list());

    CHECK_THROWS_AS(gen::random_regular(5, 3, 1), input_error); // odd n*d
    CHECK_THROWS_AS(gen::random_regular(4, 4, 1), input_error); // d >= n
}

TEST_CASE("subdivided complete graphs") {
    const Graph g = gen::subdivided_complete(4, 0);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 7);
    CHECK(min_degree(g) == 2);
    CHECK(xi(g) == 3); // strictly above 2*delta - 2
    CHECK(lambda(g) == 2);
    CHECK(lambda(g) == min_degree(g));

    for (int idx = 0; idx < 6; ++idx) {
        const Graph h = gen::subdivided_complete(4, idx);
        CHECK(h.edge_count() == 7);
        CHECK(min_degree(h) == 2);
    }
    CHECK_THROWS_AS(gen::subdivided_complete(3, 0), input_error);
    CHECK_THROWS_AS(gen::subdivided_complete(4, 6), input_error);
}

TEST_CASE("generator specs rebuild byte-identical graphs") {
    gen::GeneratorSpec spec;
    spec.family = "random-regular";
    spec.order = 12;
    spec.degree = 3;
    spec.seed = 99;
    CHECK(to_edge_list_string(spec.build()) == to_edge_list_string(spec.build()));

    spec.family = "circulant";
    spec.offsets = {1, 3};
    CHECK(to_edge_list_string(spec.build()) == to_edge_list_string(spec.build()));

    spec.family = "nonsense";
    CHECK_THROWS_AS(spec.build(), input_error);
}

TEST_CASE("generator describe strings") {
    gen::GeneratorSpec spec;
    spec.family = "harary";
    spec.order = 8;
    spec.degree = 3;
    CHECK(spec.describe() == "harary(order=8, degree=3)");
}

TEST_CASE("emitted graphs satisfy the degree-sum identity") {
    const Graph graphs[] = {gen::cycle(9),          gen::complete(6),
                            gen::path(7),           gen::star(8),
                            gen::harary(4, 10),     gen::circulant(10, {2, 5}),
                            gen::random_regular(8, 4, 3), gen::subdivided_complete(5, 2)};
    for (const Graph& g : graphs) {
        long long sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}
