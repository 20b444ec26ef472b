#pragma once

#include "reklab/graph.hpp"

#include <array>
#include <optional>

namespace reklab {

// Degree-based parameters. xi / xi3 are empty when undefined (edgeless graph,
// no connected triple) rather than sentinel integers.
struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<long long> xi;
    std::optional<long long> xi3;
};

int min_degree(const Graph& g); // n >= 1
int max_degree(const Graph& g);

// Minimum edge-degree: min over edges uv of d(u) + d(v) - 2.
std::optional<long long> xi(const Graph& g);

// All 3-vertex subsets inducing a connected subgraph (paths and triangles),
// each as a sorted triple; lexicographically ordered. Enumeration is seeded
// from each edge plus a third vertex adjacent to one of its ends, which
// covers every connected triple.
std::vector<std::array<int, 3>> connected_triples(const Graph& g);

// Connected triples that contain the given vertex.
std::vector<std::array<int, 3>> connected_triples_through(const Graph& g, int v);

struct Xi3Witness {
    long long value = 0;
    std::array<int, 3> triple{};
};

// Minimum boundary over connected triples; empty when none exists.
std::optional<Xi3Witness> xi3(const Graph& g);

// Boundary size of a connected triple without materializing the vertex set.
long long triple_boundary(const Graph& g, const std::array<int, 3>& t);

DegreeProfile degree_profile(const Graph& g);

// xi3 of G (x) C_n for maximally edge-connected G: 9*delta when
// xi = 2*delta - 2, else 9*delta + 2. Rejects impossible profiles
// (xi < 2*delta - 2) and delta < 2.
long long xi3_strong_cycle_formula(long long delta, long long xi);

} // namespace reklab
