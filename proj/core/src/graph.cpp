#include "reklab/graph.hpp"

#include <algorithm>

namespace reklab {

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 0) throw input_error("graph order must be nonnegative");
    Graph g;
    g.adj_.resize(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint out of range for order " + std::to_string(n));
        if (u == v)
            throw input_error("self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") is not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += static_cast<long long>(nbrs.size());
    }
    g.edge_count_ /= 2;
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::to_edge_list() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

CutResult boundary(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order())
        throw input_error("vertex set universe does not match graph order");
    if (x.empty()) throw input_error("boundary of the empty set is undefined");
    if (x.is_full()) throw input_error("boundary of the full vertex set is undefined");

    CutResult cut;
    cut.side_x = x;
    x.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (!x.contains(w)) cut.edges.emplace_back(std::min(v, w), std::max(v, w));
    });
    std::sort(cut.edges.begin(), cut.edges.end());
    cut.value = static_cast<long long>(cut.edges.size());
    return cut;
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return components(g).size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order())
        throw input_error("vertex set universe does not match graph order");
    if (x.empty()) throw input_error("induced subgraph of the empty set is undefined");

    InducedSubgraph out;
    out.to_parent = x.to_vector();
    out.from_parent.assign(g.order(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        out.from_parent[out.to_parent[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (int u : out.to_parent)
        for (int v : g.neighbors(u))
            if (u < v && x.contains(v)) edges.emplace_back(out.from_parent[u], out.from_parent[v]);
    out.graph = Graph::from_edge_list(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

} // namespace reklab
