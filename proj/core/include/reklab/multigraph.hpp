#pragma once

#include "reklab/graph.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace reklab {

// Undirected multigraph: edge multiplicities per unordered vertex pair.
// Internal device for the contraction-based flow pipeline; the public graph
// API stays simple.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : adj_(n) {
        if (n < 0) throw input_error("multigraph order must be nonnegative");
    }

    static MultiGraph from_graph(const Graph& g);

    int order() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v, int multiplicity = 1);

    int multiplicity(int u, int v) const;

    // (neighbor, multiplicity) pairs in ascending neighbor order.
    const std::map<int, int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    long long total_multiplicity() const;

    // (u, v, multiplicity) with u < v, lexicographic.
    std::vector<std::tuple<int, int, int>> to_edge_list() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw input_error("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order()));
    }

    std::vector<std::map<int, int>> adj_;
};

struct Contraction {
    MultiGraph graph;
    int supervertex = 0;         // id of the merged set in `graph`
    std::vector<int> vertex_map; // old id -> new id
};

// Replaces the set x (G[x] must be connected) by a single supervertex.
// Parallel edges created by the merge are kept as multiplicities.
// Vertices outside x keep their relative order as ids 0..n-|x|-1; the
// supervertex gets the last id.
Contraction contract_set(const Graph& g, const VertexSet& x);

} // namespace reklab
