#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reklab/generators.hpp"
#include "reklab/invariants.hpp"
#include "reklab/products.hpp"
#include "reklab/theorems.hpp"
#include "test_util.hpp"

using namespace reklab;

TEST_CASE("lambda2 prediction formulas") {
    // G = C5, n = 4: min{24, 30, 14}
    CHECK(predict_lambda2_strong_cycle(5, 5, 2, 2, 4) == 14);
    // G = K4, n = 3: min{27, 32, 20}
    CHECK(predict_lambda2_strong_cycle(4, 6, 3, 3, 3) == 20);
    // G = C5, n = 4: min{32, 45, 20}
    CHECK(predict_lambda2_strong_complete(5, 5, 2, 2, 4) == 20);
    // G = K4, n = 4: min{48, 48, 28}
    CHECK(predict_lambda2_strong_complete(4, 6, 3, 3, 4) == 28);
}

TEST_CASE("lambda3 prediction formulas") {
    CHECK(predict_lambda3_strong_cycle(2, 2, 4) == 18);  // xi = 2*delta - 2 branch
    CHECK(predict_lambda3_strong_cycle(2, 3, 4) == 20);  // otherwise branch
    CHECK(predict_lambda3_strong_cycle(4, 6, 4) == 36);  // K5: delta 4, xi 6
    // G = C5, n = 4: min{32, 45, 27}
    CHECK(predict_lambda3_strong_complete(5, 5, 2, 4) == 27);
    // G = K3, n = 4: min{32, 27, 27}
    CHECK(predict_lambda3_strong_complete(3, 3, 2, 4) == 27);
    // G = P3, n = 4: min{16, 21, 15}
    CHECK(predict_lambda3_strong_complete(3, 2, 1, 4) == 15);
}

TEST_CASE("lambda2 predictions match the engine") {
    const Graph c5xc4 = strong_product(gen::cycle(5), gen::cycle(4)).graph();
    CHECK(lambda2(c5xc4, CutMethod::oracle).value() == 14);
    const Graph c5xk4 = strong_product(gen::cycle(5), gen::complete(4)).graph();
    CHECK(lambda2(c5xk4, CutMethod::oracle).value() == 20);
}

TEST_CASE("lemma 2.5 upper bound with lifted witnesses") {
    const auto b1 = lemma25_upper_bound(gen::cycle(5), gen::cycle(4));
    CHECK(b1.term_g == 24); // (4 + 8) * 2
    CHECK(b1.term_h == 30); // (5 + 10) * 2
    CHECK(b1.bound == 24);

    const auto b2 = lemma25_upper_bound(gen::cycle(5), gen::complete(4));
    CHECK(b2.term_g == 32); // (4 + 12) * 2
    CHECK(b2.term_h == 45); // 15 * 3
    CHECK(b2.bound == 32);

    // each lifted cut is a valid 3-restricted cut of exactly the stated size
    const Graph product = strong_product(gen::cycle(5), gen::complete(4)).graph();
    for (const CutResult& cut : {b2.lifted_g_cut, b2.lifted_h_cut}) {
        RestrictedCut rc{3, cut};
        CHECK(testutil::witness_is_valid(product, rc));
    }
    CHECK(b2.lifted_g_cut.value == 32);
    CHECK(b2.lifted_h_cut.value == 45);

    CHECK_THROWS_AS(lemma25_upper_bound(gen::complete(2), gen::cycle(4)), input_error);
    const Graph disconnected = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(lemma25_upper_bound(disconnected, gen::cycle(4)), input_error);
}

TEST_CASE("bound holds against the engine on assorted products") {
    struct Case {
        Graph g, h;
    };
    const Case cases[] = {
        {gen::cycle(5), gen::cycle(4)},
        {gen::cycle(5), gen::complete(4)},
        {gen::complete(3), gen::cycle(5)},
        {gen::path(3), gen::complete(4)},
    };
    for (const auto& [g, h] : cases) {
        const auto bound = lemma25_upper_bound(g, h);
        const Graph product = strong_product(g, h).graph();
        const auto l3 = lambda3(product, CutMethod::flow);
        REQUIRE_FALSE(l3.infinite());
        CHECK(l3.value() <= bound.bound);
    }
}

TEST_CASE("check_theorem t3.1 on C5") {
    const auto report = check_theorem(TheoremId::t3_1, gen::cycle(5), 4);
    CHECK(report.verdict == Verdict::confirmed);
    CHECK(report.predicted.value == 18);
    CHECK(report.has_computed);
    CHECK(report.computed_value == 18);
    CHECK(report.method == "oracle");
    CHECK(report.hypotheses_hold());
}

TEST_CASE("check_theorem t3.1 second branch on subdivided K4") {
    const auto report = check_theorem(TheoremId::t3_1, gen::subdivided_complete(4, 0), 4);
    CHECK(report.verdict == Verdict::confirmed);
    CHECK(report.predicted.value == 20);
    CHECK(report.computed_value == 20);
}

TEST_CASE("check_theorem t3.1 hypothesis gate on the star") {
    const auto report = check_theorem(TheoremId::t3_1, gen::star(5), 4);
    CHECK(report.verdict == Verdict::hypotheses_unmet);
    bool max_conn_held = false, delta_failed = false;
    for (const auto& h : report.hypotheses) {
        if (h.name.find("maximally") != std::string::npos) max_conn_held = h.holds;
        if (h.name.find("delta") != std::string::npos) delta_failed = !h.holds;
    }
    CHECK(max_conn_held); // lambda = 1 = delta holds for the star
    CHECK(delta_failed);  // delta >= 2 is what fails
}

TEST_CASE("check_theorem t3.2 cases") {
    const auto c5 = check_theorem(TheoremId::t3_2, gen::cycle(5), 4);
    CHECK(c5.verdict == Verdict::confirmed);
    CHECK(c5.predicted.value == 27);

    // P3 satisfies the hypotheses (lambda = delta = 1, m = 3): value 15 at order 12
    const auto p3 = check_theorem(TheoremId::t3_2, gen::path(3), 4);
    CHECK(p3.verdict == Verdict::confirmed);
    CHECK(p3.predicted.value == 15);
    CHECK(p3.computed_value == 15);

    const auto k5 = check_theorem(TheoremId::t3_1, gen::complete(5), 4);
    CHECK(k5.verdict == Verdict::confirmed);
    CHECK(k5.predicted.value == 36);
}

TEST_CASE("check_theorem t1.1 and t1.2") {
    const auto t11 = check_theorem(TheoremId::t1_1, gen::cycle(5), 4);
    CHECK(t11.verdict == Verdict::confirmed);
    CHECK(t11.predicted.value == 14);
    const auto t12 = check_theorem(TheoremId::t1_2, gen::cycle(5), 4);
    CHECK(t12.verdict == Verdict::confirmed);
    CHECK(t12.predicted.value == 20);
    const auto k4 = check_theorem(TheoremId::t1_2, gen::complete(4), 4);
    CHECK(k4.verdict == Verdict::confirmed);
    CHECK(k4.predicted.value == 28);
}

TEST_CASE("check_theorem l2.4 and l2.5") {
    const auto l24 = check_theorem(TheoremId::l2_4, gen::cycle(6), 0);
    CHECK(l24.verdict == Verdict::confirmed);
    CHECK(l24.predicted.relation == Prediction::Relation::at_most);
    CHECK(l24.predicted.value == 2);
    CHECK(l24.computed_value == 2);

    const auto small = check_theorem(TheoremId::l2_4, gen::cycle(5), 0);
    CHECK(small.verdict == Verdict::hypotheses_unmet); // order < 6, no 3-restricted cut

    const auto l25 = check_theorem(TheoremId::l2_5, gen::cycle(5), 4);
    CHECK(l25.verdict == Verdict::confirmed);
    CHECK(l25.predicted.value == 24);
    CHECK(l25.computed_value == 18);
}

TEST_CASE("check_theorem c3.3") {
    const auto c33 = check_theorem(TheoremId::c3_3, gen::cycle(5), 4);
    CHECK(c33.verdict == Verdict::confirmed); // min{32,45} = 32 >= 27
    CHECK(c33.predicted.relation == Prediction::Relation::condition);
    CHECK(c33.predicted.value == 27);

    // the classifier agrees with the corollary's conclusion
    const Graph product = strong_product(gen::cycle(5), gen::complete(4)).graph();
    const auto verdict = classify(product, GraphProperty::maximally_3_restricted);
    CHECK(verdict.applicable);
    CHECK(verdict.holds);

    // a delta = 1 factor: star5 x K4 must still be maximally 3-restricted
    const auto star = check_theorem(TheoremId::c3_3, gen::star(5), 4);
    CHECK(star.verdict == Verdict::confirmed);
    CHECK(star.computed_value == 15);

    // unmet hypotheses are reported neutrally, never as a claim
    const Graph two_triangles =
        Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto unmet = check_theorem(TheoremId::c3_3, two_triangles, 4);
    CHECK(unmet.verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("budget gates produce oracle-too-large, never a silent pass") {
    Budget tiny;
    tiny.oracle = 4;
    tiny.flow = 8;
    const auto report = check_theorem(TheoremId::t3_1, gen::cycle(5), 4, tiny);
    CHECK(report.verdict == Verdict::oracle_too_large);
    CHECK_FALSE(report.has_computed);

    Budget flow_only;
    flow_only.oracle = 4;
    flow_only.flow = 2000;
    const auto flowed = check_theorem(TheoremId::t3_1, gen::cycle(5), 4, flow_only);
    CHECK(flowed.verdict == Verdict::confirmed);
    CHECK(flowed.method == "flow");
}

TEST_CASE("theorem id round trip") {
    for (TheoremId id : all_theorems()) CHECK(theorem_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(theorem_from_string("t9.9"), input_error);
}
