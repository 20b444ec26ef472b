#pragma once

#include "reklab/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace reklab::gen {

Graph cycle(int n);    // n >= 3, edges i-(i+1 mod n)
Graph complete(int n); // n >= 1
Graph path(int n);     // n >= 1, edges i-(i+1)
Graph star(int n);     // n >= 1, center 0, K_{1,n-1}

// Harary graph H_{k,n}: the classical minimum-size construction with
// lambda = delta = k. Requires n > k >= 2 and k*n even. Downstream checks
// re-verify maximal edge-connectivity rather than trusting the construction.
Graph harary(int k, int n);

// Circulant on offsets from 1..floor(n/2). May be disconnected (for example
// a single offset sharing a divisor with n); emitted as-is.
Graph circulant(int n, std::span<const int> offsets);
Graph circulant(int n, std::initializer_list<int> offsets);

// d-regular graph via the seeded pairing model, rejecting pairings with
// loops or multi-edges. The RNG is SplitMix64, so a (n, d, seed) triple
// reproduces the same edge set everywhere. Throws when the rejection budget
// is exhausted. Connectivity is not guaranteed.
Graph random_regular(int n, int d, std::uint64_t seed);

// K_n with the edge at `edge_index` (lexicographic edge order) subdivided
// through a new vertex with id n. For n = 4 this gives the canonical
// xi > 2*delta - 2 instance.
Graph subdivided_complete(int n, int edge_index);

// A serializable recipe: identical specs produce byte-identical graphs.
struct GeneratorSpec {
    std::string family; // cycle|complete|path|star|harary|circulant|random-regular|subdivided-complete
    int order = 0;
    int degree = 0;           // harary k / random-regular d
    std::vector<int> offsets; // circulant connection set
    int edge_index = 0;       // subdivided-complete
    std::uint64_t seed = 0;   // random-regular

    Graph build() const;
    std::string describe() const;
};

const std::vector<std::string>& known_families();

} // namespace reklab::gen
