#pragma once

#include "reklab/errors.hpp"
#include "reklab/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace reklab {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default; // the empty graph

    // Builds a graph from (possibly repeated) endpoint pairs. Duplicates are
    // collapsed; self-loops and out-of-range endpoints are rejected.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    // Neighbors of v in ascending order.
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool adjacent(int u, int v) const;

    // Edges as pairs u < v in lexicographic order.
    std::vector<Edge> to_edge_list() const;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw input_error("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order()));
    }

    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

// A cut given by one side of a bipartition: the edges with exactly one
// endpoint in side_x. `value == edges.size()` (pairs repeat per multiplicity
// when the cut comes from a multigraph).
struct CutResult {
    long long value = 0;
    VertexSet side_x;
    std::vector<Edge> edges;
};

// Boundary edges of x: one endpoint in x, the other outside. x must be a
// proper non-empty subset of the vertices.
CutResult boundary(const Graph& g, const VertexSet& x);

// Connected components as vertex sets, ordered by smallest member. The empty
// graph has no components and does not count as connected.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;   // new id -> old id (ascending)
    std::vector<int> from_parent; // old id -> new id, -1 outside the set
};

// G[x] with the old<->new vertex id maps. x must be non-empty.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

} // namespace reklab
