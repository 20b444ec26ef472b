#include "reklab/multigraph.hpp"

namespace reklab {

MultiGraph MultiGraph::from_graph(const Graph& g) {
    MultiGraph m(g.order());
    for (const auto& [u, v] : g.to_edge_list()) m.add_edge(u, v, 1);
    return m;
}

void MultiGraph::add_edge(int u, int v, int multiplicity) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop not allowed in multigraph");
    if (multiplicity < 1) throw input_error("edge multiplicity must be positive");
    adj_[u][v] += multiplicity;
    adj_[v][u] += multiplicity;
}

int MultiGraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = adj_[u].find(v);
    return it == adj_[u].end() ? 0 : it->second;
}

long long MultiGraph::total_multiplicity() const {
    long long total = 0;
    for (const auto& nbrs : adj_)
        for (const auto& [_, mult] : nbrs) total += mult;
    return total / 2;
}

std::vector<std::tuple<int, int, int>> MultiGraph::to_edge_list() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (const auto& [v, mult] : adj_[u])
            if (u < v) out.emplace_back(u, v, mult);
    return out;
}

Contraction contract_set(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order())
        throw input_error("vertex set universe does not match graph order");
    if (x.empty()) throw input_error("cannot contract the empty set");
    if (components(induced_subgraph(g, x).graph).size() != 1)
        throw input_error("contract_set requires the induced subgraph G[X] to be connected");

    Contraction out;
    const int n = g.order();
    const int kept = n - x.count();
    out.supervertex = kept;
    out.vertex_map.assign(n, kept);
    int next_id = 0;
    for (int v = 0; v < n; ++v)
        if (!x.contains(v)) out.vertex_map[v] = next_id++;

    out.graph = MultiGraph(kept + 1);
    for (const auto& [u, v] : g.to_edge_list()) {
        const int nu = out.vertex_map[u], nv = out.vertex_map[v];
        if (nu == nv) continue; // edge inside the contracted set
        out.graph.add_edge(nu, nv, 1);
    }
    return out;
}

} // namespace reklab
