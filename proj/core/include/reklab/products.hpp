#pragma once

#include "reklab/graph.hpp"

#include <string>
#include <vector>

namespace reklab {

enum class ProductKind { strong, cartesian, direct, k2odot };

std::string to_string(ProductKind kind);
ProductKind product_kind_from_string(const std::string& name);

// A product of two factors with the flat vertex indexing (x, y) <-> x*n + y,
// left factor major. For k2odot the left factor is K2 (m = 2, x in {0, 1}).
class ProductGraph {
public:
    const Graph& graph() const { return graph_; }
    ProductKind kind() const { return kind_; }
    int left_order() const { return m_; }
    int right_order() const { return n_; }

    int flat_index(int x, int y) const {
        if (x < 0 || x >= m_ || y < 0 || y >= n_)
            throw input_error("product pair (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") out of range");
        return x * n_ + y;
    }

    std::pair<int, int> project(int v) const {
        if (v < 0 || v >= m_ * n_)
            throw input_error("product vertex " + std::to_string(v) + " out of range");
        return {v / n_, v % n_};
    }

private:
    friend ProductGraph strong_product(const Graph&, const Graph&);
    friend ProductGraph cartesian_product(const Graph&, const Graph&);
    friend ProductGraph direct_product(const Graph&, const Graph&);
    friend ProductGraph k2_odot(const Graph&);

    ProductGraph(Graph g, ProductKind kind, int m, int n)
        : graph_(std::move(g)), kind_(kind), m_(m), n_(n) {}

    Graph graph_;
    ProductKind kind_;
    int m_;
    int n_;
};

// (x1,y1) ~ (x2,y2) iff x1 = x2 and y1y2 in E(H), or y1 = y2 and x1x2 in
// E(G), or x1x2 in E(G) and y1y2 in E(H).
ProductGraph strong_product(const Graph& g, const Graph& h);
ProductGraph cartesian_product(const Graph& g, const Graph& h);
ProductGraph direct_product(const Graph& g, const Graph& h);

// K2 (.) H: vertices {a,b} x V(H); only the cross-fiber edges survive:
// (a,y1)(b,y2) iff y1 = y2 or y1y2 in E(H). Connected iff H is connected.
ProductGraph k2_odot(const Graph& h);

enum class LayerKind { h_layer, g_layer };

struct Layer {
    LayerKind kind;
    int anchor; // the factor vertex the layer sits over
    VertexSet members;
};

// All m H-layers followed by all n G-layers.
std::vector<Layer> layers(const ProductGraph& pg);

enum class LayerSide { split, inside_x, inside_complement };

// Per-layer view of a bipartition: which layers meet both sides, which sit
// entirely in side_x or its complement. The all-*-split flags are the
// fiber-splitting hypothesis rows/columns form.
struct FiberReport {
    std::vector<LayerSide> h_layers; // indexed by x in V(G)
    std::vector<LayerSide> g_layers; // indexed by y in V(H)
    bool all_h_layers_split = false;
    bool all_g_layers_split = false;
};

FiberReport classify_cut_by_layers(const ProductGraph& pg, const VertexSet& side_x);

} // namespace reklab
