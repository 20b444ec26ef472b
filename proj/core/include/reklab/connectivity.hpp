#pragma once

#include "reklab/graph.hpp"
#include "reklab/multigraph.hpp"

#include <array>
#include <optional>
#include <string>

namespace reklab {

enum class CutMethod { flow, oracle };

std::string to_string(CutMethod m);
CutMethod cut_method_from_string(const std::string& name);

struct EngineOptions {
    // Exhaustive enumeration refuses graphs above this order.
    int oracle_limit = 24;
    // 0: use REK_LAB_THREADS, falling back to the hardware thread count.
    int threads = 0;
};

// Worker count after applying EngineOptions::threads resolution.
int resolve_threads(int requested);

// A k-restricted edge-connectivity result: the minimum cut, or +infinity
// (no witness) when no k-restricted edge-cut exists.
struct RestrictedCut {
    int k = 1;
    std::optional<CutResult> cut;

    bool infinite() const { return !cut.has_value(); }

    long long value() const {
        if (!cut) throw input_error("restricted edge-connectivity is +infinity");
        return cut->value;
    }
};

// Edge-connectivity. Requires order >= 2; 0 iff disconnected.
long long lambda(const Graph& g);
CutResult lambda_cut(const Graph& g, const EngineOptions& opts = {});

// Minimum s-t edge cut of a multigraph; capacities are the multiplicities.
// The side_x of the result is the s-side and induces a connected subgraph.
CutResult min_st_cut(const MultiGraph& g, int s, int t);

// Restricted (k=2) and 3-restricted (k=3) edge-connectivity.
// flow: minimum over contracted anchor pairs via max-flow.
// oracle: exhaustive bipartition enumeration (order <= oracle_limit).
RestrictedCut lambda2(const Graph& g, CutMethod method, const EngineOptions& opts = {});
RestrictedCut lambda3(const Graph& g, CutMethod method, const EngineOptions& opts = {});

// Exact lambda_k for any k >= 1 by exhaustive bipartition enumeration over
// subsets containing vertex 0. Refuses orders above the oracle limit.
RestrictedCut lambda_k_oracle(const Graph& g, int k, const EngineOptions& opts = {});

// Dispatcher used by the CLI: k = 1 -> lambda, k = 2/3 -> chosen method,
// k >= 4 -> oracle only.
RestrictedCut restricted_connectivity(const Graph& g, int k, CutMethod method,
                                      const EngineOptions& opts = {});

struct TriplePair {
    std::array<int, 3> first{};
    std::array<int, 3> second{};
};

// Two vertex-disjoint paths of order 3 (as connected triples), if any exist.
std::optional<TriplePair> find_disjoint_triples(const Graph& g);
bool has_3_restricted_cut(const Graph& g);

enum class GraphProperty {
    maximally_edge_connected,
    super_edge_connected,
    maximally_restricted,
    super_restricted,
    maximally_3_restricted,
    super_3_restricted,
};

std::string to_string(GraphProperty p);
GraphProperty graph_property_from_string(const std::string& name);

struct ClassifierVerdict {
    GraphProperty property;
    // false when the defining parameter is undefined (e.g. lambda3 infinite);
    // then `holds` carries no claim.
    bool applicable = true;
    bool holds = false;
    std::optional<long long> computed;   // lambda-type value compared
    std::optional<long long> reference;  // delta / xi / xi3 counterpart
    std::optional<CutResult> certificate;
    std::string note;
};

// maximal-*: compares the connectivity parameter with its degree-based bound.
// super-*: enumerates every minimum cut (oracle-only; order <= oracle_limit).
ClassifierVerdict classify(const Graph& g, GraphProperty property,
                           const EngineOptions& opts = {});

} // namespace reklab
