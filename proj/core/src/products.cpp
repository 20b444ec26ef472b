#include "reklab/products.hpp"

namespace reklab {

std::string to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::strong: return "strong";
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::k2odot: return "k2odot";
    }
    return "?";
}

ProductKind product_kind_from_string(const std::string& name) {
    if (name == "strong") return ProductKind::strong;
    if (name == "cartesian") return ProductKind::cartesian;
    if (name == "direct") return ProductKind::direct;
    if (name == "k2odot") return ProductKind::k2odot;
    throw input_error("unknown product kind `" + name + "`");
}

namespace {

void check_factors(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw input_error("product factors must be non-empty");
}

// Cartesian edges: copy of H inside every G-fiber, copy of G over every
// H-vertex.
void add_cartesian_edges(const Graph& g, const Graph& h, std::vector<Edge>& edges) {
    const int m = g.order(), n = h.order();
    for (int x = 0; x < m; ++x)
        for (const auto& [y1, y2] : h.to_edge_list()) edges.emplace_back(x * n + y1, x * n + y2);
    for (const auto& [x1, x2] : g.to_edge_list())
        for (int y = 0; y < n; ++y) edges.emplace_back(x1 * n + y, x2 * n + y);
}

// Direct edges: both coordinates move along factor edges.
void add_direct_edges(const Graph& g, const Graph& h, std::vector<Edge>& edges) {
    const int n = h.order();
    for (const auto& [x1, x2] : g.to_edge_list()) {
        for (const auto& [y1, y2] : h.to_edge_list()) {
            edges.emplace_back(x1 * n + y1, x2 * n + y2);
            edges.emplace_back(x1 * n + y2, x2 * n + y1);
        }
    }
}

} // namespace

ProductGraph strong_product(const Graph& g, const Graph& h) {
    check_factors(g, h);
    std::vector<Edge> edges;
    add_cartesian_edges(g, h, edges);
    add_direct_edges(g, h, edges);
    return ProductGraph(Graph::from_edge_list(g.order() * h.order(), edges), ProductKind::strong,
                        g.order(), h.order());
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    check_factors(g, h);
    std::vector<Edge> edges;
    add_cartesian_edges(g, h, edges);
    return ProductGraph(Graph::from_edge_list(g.order() * h.order(), edges), ProductKind::cartesian,
                        g.order(), h.order());
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
    check_factors(g, h);
    std::vector<Edge> edges;
    add_direct_edges(g, h, edges);
    return ProductGraph(Graph::from_edge_list(g.order() * h.order(), edges), ProductKind::direct,
                        g.order(), h.order());
}

ProductGraph k2_odot(const Graph& h) {
    // Built from the cross-fiber adjacency rule directly; the subtraction
    // identity K2 (.) H = K2 x H - E({a} x H) - E({b} x H) is a test, not the
    // construction.
    const int n = h.order();
    std::vector<Edge> edges;
    for (int y = 0; y < n; ++y) edges.emplace_back(y, n + y);
    for (const auto& [y1, y2] : h.to_edge_list()) {
        edges.emplace_back(y1, n + y2);
        edges.emplace_back(y2, n + y1);
    }
    return ProductGraph(Graph::from_edge_list(2 * n, edges), ProductKind::k2odot, 2, n);
}

std::vector<Layer> layers(const ProductGraph& pg) {
    const int m = pg.left_order(), n = pg.right_order();
    const int order = m * n;
    std::vector<Layer> out;
    out.reserve(m + n);
    for (int x = 0; x < m; ++x) {
        Layer layer{LayerKind::h_layer, x, VertexSet(order)};
        for (int y = 0; y < n; ++y) layer.members.insert(pg.flat_index(x, y));
        out.push_back(std::move(layer));
    }
    for (int y = 0; y < n; ++y) {
        Layer layer{LayerKind::g_layer, y, VertexSet(order)};
        for (int x = 0; x < m; ++x) layer.members.insert(pg.flat_index(x, y));
        out.push_back(std::move(layer));
    }
    return out;
}

FiberReport classify_cut_by_layers(const ProductGraph& pg, const VertexSet& side_x) {
    const int m = pg.left_order(), n = pg.right_order();
    if (side_x.universe() != m * n)
        throw input_error("bipartition universe does not match product order");
    if (side_x.empty() || side_x.is_full())
        throw input_error("bipartition side must be a proper non-empty subset");

    auto classify_members = [&](int count, auto member) {
        int inside = 0;
        for (int i = 0; i < count; ++i)
            if (side_x.contains(member(i))) ++inside;
        if (inside == 0) return LayerSide::inside_complement;
        if (inside == count) return LayerSide::inside_x;
        return LayerSide::split;
    };

    FiberReport report;
    report.h_layers.reserve(m);
    report.g_layers.reserve(n);
    for (int x = 0; x < m; ++x)
        report.h_layers.push_back(classify_members(n, [&](int y) { return pg.flat_index(x, y); }));
    for (int y = 0; y < n; ++y)
        report.g_layers.push_back(classify_members(m, [&](int x) { return pg.flat_index(x, y); }));

    auto all_split = [](const std::vector<LayerSide>& sides) {
        for (auto s : sides)
            if (s != LayerSide::split) return false;
        return true;
    };
    report.all_h_layers_split = all_split(report.h_layers);
    report.all_g_layers_split = all_split(report.g_layers);
    return report;
}

} // namespace reklab
