#pragma once

#include "reklab/connectivity.hpp"
#include "reklab/graph.hpp"

#include <string>
#include <vector>

namespace reklab {

enum class TheoremId { t1_1, t1_2, l2_4, l2_5, t3_1, t3_2, c3_3 };

std::string to_string(TheoremId id);
TheoremId theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

// Closed forms. Arguments are the factor's order m, size e(G), minimum
// degree, edge-connectivity and the cycle/complete factor order n.

// lambda2(G x C_n) = min{3n*lambda, 2(m + 2e), 6*delta + 2}
long long predict_lambda2_strong_cycle(long long m, long long e_g, long long delta_g,
                                       long long lambda_g, long long n);

// lambda2(G x K_n) = min{n^2*lambda, (n-1)(m + 2e), 2n*delta + 2n - 4}
long long predict_lambda2_strong_complete(long long m, long long e_g, long long delta_g,
                                          long long lambda_g, long long n);

// lambda3(G x C_n) = 9*delta if xi = 2*delta - 2, else 9*delta + 2
long long predict_lambda3_strong_cycle(long long delta_g, long long xi_g, long long n);

// lambda3(G x K_n) = min{n^2*delta, (n-1)(m + 2e), 3n*delta + 3n - 9}
long long predict_lambda3_strong_complete(long long m, long long e_g, long long delta_g,
                                          long long n);

// lambda3(G x H) <= min{(n + 2e(H))*lambda(G), (m + 2e(G))*lambda(H)}, with
// the two lifted factor cuts as explicit witnesses in the product.
struct Lemma25Bound {
    long long bound = 0;
    long long term_g = 0;       // (n + 2e(H)) * lambda(G)
    long long term_h = 0;       // (m + 2e(G)) * lambda(H)
    CutResult lifted_g_cut;     // [X x V(H), complement] for a minimum cut X of G
    CutResult lifted_h_cut;     // [V(G) x Y, complement] for a minimum cut Y of H
};
Lemma25Bound lemma25_upper_bound(const Graph& g, const Graph& h);

struct Hypothesis {
    std::string name;
    bool holds = false;
};

enum class Verdict { confirmed, violated, hypotheses_unmet, oracle_too_large };

std::string to_string(Verdict v);

struct Prediction {
    enum class Relation { equals, at_most, condition };
    Relation relation = Relation::equals;
    long long value = 0;
};

std::string to_string(Prediction::Relation r);

struct Budget {
    int oracle = 24;  // exhaustive enumeration up to this product order
    int flow = 2000;  // flow methods up to this product order
};

struct TheoremReport {
    TheoremId theorem = TheoremId::t3_1;
    std::vector<Hypothesis> hypotheses;
    Prediction predicted;
    bool has_computed = false;
    bool computed_infinite = false;
    long long computed_value = 0;
    std::string method; // "oracle", "flow" or "" when nothing was computed
    Verdict verdict = Verdict::hypotheses_unmet;
    std::string note;

    bool hypotheses_hold() const {
        for (const auto& h : hypotheses)
            if (!h.holds) return false;
        return true;
    }
};

// Builds the product named by the theorem (cycle or complete right factor of
// order n; l2.4 inspects g itself), re-derives every hypothesis, computes
// the ground-truth connectivity within the budget, and compares. Predictions
// are emitted even when hypotheses fail, as exploratory values.
TheoremReport check_theorem(TheoremId id, const Graph& g, int n, const Budget& budget = {},
                            const EngineOptions& opts = {});

} // namespace reklab
