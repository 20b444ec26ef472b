#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reklab/connectivity.hpp"
#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/products.hpp"
#include "test_util.hpp"

using namespace reklab;

namespace {

const Graph kTwoTriangles =
    Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});

// connected graphs exercised by the agreement/bound properties
std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n = 6; n <= 10; ++n) {
        out.push_back(gen::cycle(n));
        out.push_back(gen::path(n));
        out.push_back(gen::star(n));
    }
    out.push_back(gen::complete(6));
    out.push_back(gen::complete(7));
    out.push_back(gen::harary(3, 8));
    out.push_back(gen::harary(4, 9));
    out.push_back(gen::circulant(8, {1, 2}));
    out.push_back(gen::circulant(9, {1, 3}));
    out.push_back(gen::subdivided_complete(5, 3));
    for (std::uint64_t seed : {1, 2, 3}) {
        const Graph g = gen::random_regular(8, 3, seed);
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

} // namespace

TEST_CASE("lambda on standard families") {
    for (int n : {3, 5, 8}) CHECK(lambda(gen::cycle(n)) == 2);
    for (int n : {3, 4, 6}) CHECK(lambda(gen::complete(n)) == n - 1);
    CHECK(lambda(kTwoTriangles) == 0);
    CHECK(lambda(gen::path(7)) == 1);
    CHECK_THROWS_AS(lambda(Graph::from_edge_list(1, {})), input_error);
}

TEST_CASE("lambda witness is a boundary of the stated value") {
    for (const Graph& g : {gen::cycle(6), gen::harary(3, 8), gen::path(5)}) {
        const CutResult cut = lambda_cut(g);
        CHECK(cut.value == lambda(g));
        CHECK(boundary(g, cut.side_x).value == cut.value);
        CHECK(cut.side_x.contains(0));
    }
}

TEST_CASE("min_st_cut on multigraphs") {
    const auto k4 = MultiGraph::from_graph(gen::complete(4));
    CHECK(min_st_cut(k4, 0, 3).value == 3);
    const auto p4 = MultiGraph::from_graph(gen::path(4));
    CHECK(min_st_cut(p4, 0, 3).value == 1);

    const auto contracted = contract_set(gen::cycle(4), VertexSet::of(4, {0, 1}));
    const auto cut = min_st_cut(contracted.graph, contracted.supervertex, 0);
    CHECK(cut.value == 2);
    CHECK(cut.value == static_cast<long long>(cut.edges.size()));

    CHECK_THROWS_AS(min_st_cut(k4, 1, 1), input_error);

    // s-side of a minimum cut induces a connected subgraph
    const auto mg = MultiGraph::from_graph(gen::harary(3, 8));
    const auto c = min_st_cut(mg, 0, 5);
    const Graph h38 = gen::harary(3, 8);
    CHECK(components(induced_subgraph(h38, c.side_x).graph).size() == 1);
}

TEST_CASE("lambda2 examples") {
    for (auto method : {CutMethod::flow, CutMethod::oracle}) {
        CAPTURE(to_string(method));
        CHECK(lambda2(gen::star(6), method).infinite());
        CHECK(lambda2(gen::cycle(6), method).value() == 2);
        CHECK(lambda2(gen::complete(4), method).value() == 4);
    }
    CHECK(lambda2(gen::complete(4), CutMethod::oracle).value() == *xi(gen::complete(4)));
    CHECK(*testutil::brute_lambda_k(gen::complete(4), 2) == 4);
    CHECK_THROWS_AS(lambda2(gen::cycle(3), CutMethod::flow), input_error);
}

TEST_CASE("disjoint P3 search") {
    CHECK(has_3_restricted_cut(gen::path(6)));
    CHECK_FALSE(has_3_restricted_cut(gen::star(6)));

    // double star: two adjacent centers, two leaves each
    const Graph double_star =
        Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    const auto pair = find_disjoint_triples(double_star);
    REQUIRE(pair.has_value());
    for (const auto& triple : {pair->first, pair->second}) {
        const int internal = (double_star.adjacent(triple[0], triple[1]) ? 1 : 0) +
                             (double_star.adjacent(triple[0], triple[2]) ? 1 : 0) +
                             (double_star.adjacent(triple[1], triple[2]) ? 1 : 0);
        CHECK(internal >= 2);
    }
    for (int x : pair->first)
        for (int y : pair->second) CHECK(x != y);
}

TEST_CASE("lambda3 examples") {
    for (auto method : {CutMethod::flow, CutMethod::oracle}) {
        CAPTURE(to_string(method));
        CHECK(lambda3(gen::cycle(6), method).value() == 2);
        CHECK(lambda3(gen::cycle(5), method).infinite()); // two parts of >= 3 need 6 vertices
        CHECK(lambda3(kTwoTriangles, method).value() == 0);
        CHECK(lambda3(gen::star(8), method).infinite());
    }
    const Graph k1_meets_k5 = Graph::from_edge_list(
        6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(lambda3(k1_meets_k5, CutMethod::flow).infinite()); // isolated vertex blocks every cut
    CHECK(lambda3(k1_meets_k5, CutMethod::oracle).infinite());
}

TEST_CASE("lambda_k oracle") {
    CHECK(lambda_k_oracle(gen::complete(4), 1).value() == 3);
    CHECK(lambda_k_oracle(gen::complete(4), 1).value() == lambda(gen::complete(4)));
    CHECK(lambda_k_oracle(gen::cycle(5), 3).infinite());
    CHECK(lambda_k_oracle(gen::cycle(6), 2).value() ==
          lambda2(gen::cycle(6), CutMethod::flow).value());
    CHECK(lambda_k_oracle(gen::cycle(8), 4).value() == 2); // generic k

    EngineOptions tight;
    tight.oracle_limit = 10;
    CHECK_THROWS_WITH_AS(lambda_k_oracle(gen::cycle(12), 2, tight),
                         doctest::Contains("oracle limit 10"), oracle_limit_error);
}

TEST_CASE("restricted_connectivity dispatch") {
    CHECK(restricted_connectivity(gen::cycle(6), 1, CutMethod::flow).value() == 2);
    CHECK(restricted_connectivity(gen::cycle(6), 1, CutMethod::oracle).value() == 2);
    CHECK(restricted_connectivity(gen::cycle(6), 3, CutMethod::flow).value() == 2);
    CHECK(restricted_connectivity(gen::cycle(10), 4, CutMethod::oracle).value() == 2);
    CHECK_THROWS_AS(restricted_connectivity(gen::cycle(10), 4, CutMethod::flow), input_error);
    CHECK_THROWS_AS(restricted_connectivity(gen::cycle(6), 0, CutMethod::flow), input_error);
}

TEST_CASE("flow and oracle agree with valid witnesses across the corpus") {
    for (const Graph& g : small_corpus()) {
        CAPTURE(g.order());
        CAPTURE(g.edge_count());
        for (int k : {2, 3}) {
            if (k == 2 && g.order() < 4) continue;
            const auto flow = k == 2 ? lambda2(g, CutMethod::flow) : lambda3(g, CutMethod::flow);
            const auto oracle =
                k == 2 ? lambda2(g, CutMethod::oracle) : lambda3(g, CutMethod::oracle);
            CHECK(flow.infinite() == oracle.infinite());
            if (!flow.infinite()) {
                CHECK(flow.value() == oracle.value());
                CHECK(testutil::witness_is_valid(g, flow));
                CHECK(testutil::witness_is_valid(g, oracle));
            }
            // independent subset-enumeration reference
            if (g.order() <= 9) {
                const auto brute = testutil::brute_lambda_k(g, k);
                CHECK(brute.has_value() != flow.infinite());
                if (brute && !flow.infinite()) CHECK(*brute == flow.value());
            }
        }
    }
}

TEST_CASE("bounds and existence criteria across the corpus") {
    for (const Graph& g : small_corpus()) {
        CAPTURE(g.order());
        const int n = g.order();
        CHECK(lambda(g) <= min_degree(g));

        const bool star = g.edge_count() == n - 1 && max_degree(g) == n - 1;
        if (!star && n >= 4 && is_connected(g)) {
            const auto l2 = lambda2(g, CutMethod::flow);
            REQUIRE_FALSE(l2.infinite());
            CHECK(l2.value() <= *xi(g));
        }

        const auto l3 = lambda3(g, CutMethod::flow);
        CHECK(has_3_restricted_cut(g) == !l3.infinite()); // connected corpus
        if (!l3.infinite() && n >= 6) {
            const auto x3 = xi3(g);
            REQUIRE(x3.has_value());
            CHECK(l3.value() <= x3->value);
        }

        // monotone restriction chain where everything is finite
        if (n >= 4 && is_connected(g)) {
            const auto l2 = lambda2(g, CutMethod::flow);
            if (!l2.infinite()) {
                CHECK(lambda(g) <= l2.value());
                if (!l3.infinite()) CHECK(l2.value() <= l3.value());
            }
        }
    }
}

TEST_CASE("k2 odot cut bound on small factors") {
    for (const Graph& h : {gen::path(3), gen::cycle(5), gen::complete(4), gen::harary(3, 8)}) {
        REQUIRE(is_connected(h));
        const long long lam_h = lambda(h);
        const auto product = k2_odot(h);
        const Graph& pg = product.graph();
        const int n = h.order();
        for (unsigned mask = 1; mask + 1 < (1u << pg.order()); mask += 2) {
            bool a_in = false, a_out = false, b_in = false, b_out = false;
            for (int y = 0; y < n; ++y) {
                ((mask >> y) & 1 ? a_in : a_out) = true;
                ((mask >> (n + y)) & 1 ? b_in : b_out) = true;
            }
            if (!(a_in && a_out && b_in && b_out)) continue;
            std::set<int> side;
            for (int v = 0; v < pg.order(); ++v)
                if ((mask >> v) & 1) side.insert(v);
            CHECK(testutil::brute_boundary(pg, side) >= 2 * lam_h);
        }
    }
}

TEST_CASE("engine results are deterministic across thread counts") {
    const Graph g = strong_product(gen::cycle(5), gen::cycle(4)).graph();
    EngineOptions one, many;
    one.threads = 1;
    many.threads = 4;
    for (auto method : {CutMethod::flow, CutMethod::oracle}) {
        const auto a = lambda3(g, method, one);
        const auto b = lambda3(g, method, many);
        REQUIRE_FALSE(a.infinite());
        CHECK(a.value() == b.value());
        CHECK(a.cut->side_x == b.cut->side_x);
        CHECK(a.cut->edges == b.cut->edges);
    }
}

TEST_CASE("classifiers") {
    const auto max_c6 = classify(gen::cycle(6), GraphProperty::maximally_edge_connected);
    CHECK(max_c6.applicable);
    CHECK(max_c6.holds);
    CHECK(max_c6.computed == 2);
    CHECK(max_c6.reference == 2);

    // a 2-cut of C6 can split it into two P3s
    const auto super_c6 = classify(gen::cycle(6), GraphProperty::super_edge_connected);
    CHECK(super_c6.applicable);
    CHECK_FALSE(super_c6.holds);
    REQUIRE(super_c6.certificate.has_value());
    CHECK(super_c6.certificate->value == 2);
    CHECK(super_c6.certificate->side_x.count() >= 2);
    CHECK(super_c6.certificate->side_x.count() <= 4);

    const auto super_k4 = classify(gen::complete(4), GraphProperty::super_edge_connected);
    CHECK(super_k4.holds);

    const auto max3_c6 = classify(gen::cycle(6), GraphProperty::maximally_3_restricted);
    CHECK(max3_c6.applicable);
    CHECK(max3_c6.holds); // lambda3 = xi3 = 2

    const auto super3_c6 = classify(gen::cycle(6), GraphProperty::super_3_restricted);
    CHECK(super3_c6.applicable);
    CHECK(super3_c6.holds); // every 2-cut into >= 3 parts leaves two P3s

    const auto super2_c6 = classify(gen::cycle(6), GraphProperty::super_restricted);
    CHECK(super2_c6.applicable);
    CHECK_FALSE(super2_c6.holds); // the (3,3) split isolates no single edge

    // not-applicable outcomes stay distinct from false
    const auto star_max2 = classify(gen::star(6), GraphProperty::maximally_restricted);
    CHECK_FALSE(star_max2.applicable);
    const auto c5_max3 = classify(gen::cycle(5), GraphProperty::maximally_3_restricted);
    CHECK_FALSE(c5_max3.applicable);

    EngineOptions tight;
    tight.oracle_limit = 8;
    CHECK_THROWS_AS(classify(gen::cycle(12), GraphProperty::super_edge_connected, tight),
                    oracle_limit_error);
}

TEST_CASE("paper product values") {
    const Graph c5xc4 = strong_product(gen::cycle(5), gen::cycle(4)).graph();
    CHECK(lambda3(c5xc4, CutMethod::oracle).value() == 18);
    const Graph c5xk4 = strong_product(gen::cycle(5), gen::complete(4)).graph();
    CHECK(lambda3(c5xk4, CutMethod::flow).value() == 27);
    const auto verdict = classify(c5xc4, GraphProperty::maximally_3_restricted);
    CHECK(verdict.holds);
}
