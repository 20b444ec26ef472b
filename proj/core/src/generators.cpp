#include "reklab/generators.hpp"

#include "reklab/rng.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace reklab::gen {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

} // namespace

Graph cycle(int n) {
    require(n >= 3, "cycle requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
    require(n >= 1, "complete graph requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
    require(n >= 1, "path requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
    require(n >= 1, "star requires n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(n, edges);
}

Graph harary(int k, int n) {
    require(k >= 2 && n > k, "harary requires n > k >= 2");
    require((static_cast<long long>(k) * n) % 2 == 0, "harary requires k*n even");
    std::vector<int> offsets;
    for (int s = 1; s <= k / 2; ++s) offsets.push_back(s);
    if (k % 2 == 1) offsets.push_back(n / 2); // n is even here
    return circulant(n, offsets);
}

Graph circulant(int n, std::span<const int> offsets) {
    require(n >= 2, "circulant requires n >= 2");
    for (int s : offsets)
        require(s >= 1 && s <= n / 2,
                "circulant offset " + std::to_string(s) + " outside 1..n/2");
    std::vector<Edge> edges;
    for (int s : offsets)
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + s) % n);
    return Graph::from_edge_list(n, edges); // duplicates from offset n/2 collapse
}

Graph circulant(int n, std::initializer_list<int> offsets) {
    return circulant(n, std::span<const int>(offsets.begin(), offsets.size()));
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    require(n >= 1 && d >= 0 && d < n, "random regular requires 0 <= d < n");
    require((static_cast<long long>(n) * d) % 2 == 0, "random regular requires n*d even");

    // dense small cases need many tries: for d = n-1 only K_n is realizable
    // and a uniform pairing lands on it with probability well under 1e-3
    constexpr int kAttempts = 20000;
    SplitMix64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        // Fisher-Yates with SplitMix64 keeps the pairing reproducible
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);

        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            const int u = std::min(stubs[i], stubs[i + 1]);
            const int v = std::max(stubs[i], stubs[i + 1]);
            if (u == v || !seen.emplace(u, v).second) ok = false;
        }
        if (!ok) continue;
        return Graph::from_edge_list(n, std::vector<Edge>(seen.begin(), seen.end()));
    }
    throw input_error("random regular pairing rejected " + std::to_string(kAttempts) +
                      " times for n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                      ", seed=" + std::to_string(seed));
}

Graph subdivided_complete(int n, int edge_index) {
    require(n >= 4, "subdivided complete requires n >= 4");
    const int edge_total = n * (n - 1) / 2;
    require(edge_index >= 0 && edge_index < edge_total,
            "edge index " + std::to_string(edge_index) + " outside 0.." +
                std::to_string(edge_total - 1));

    std::vector<Edge> edges;
    int idx = 0;
    Edge chosen{-1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (idx++ == edge_index)
                chosen = {i, j};
            else
                edges.emplace_back(i, j);
        }
    edges.emplace_back(chosen.first, n);
    edges.emplace_back(chosen.second, n);
    return Graph::from_edge_list(n + 1, edges);
}

Graph GeneratorSpec::build() const {
    if (family == "cycle") return cycle(order);
    if (family == "complete") return complete(order);
    if (family == "path") return path(order);
    if (family == "star") return star(order);
    if (family == "harary") return harary(degree, order);
    if (family == "circulant") return circulant(order, offsets);
    if (family == "random-regular") return random_regular(order, degree, seed);
    if (family == "subdivided-complete") return subdivided_complete(order, edge_index);
    throw input_error("unknown generator family `" + family + "`");
}

std::string GeneratorSpec::describe() const {
    std::ostringstream ss;
    ss << family << "(order=" << order;
    if (family == "harary" || family == "random-regular") ss << ", degree=" << degree;
    if (family == "circulant") {
        ss << ", offsets={";
        for (std::size_t i = 0; i < offsets.size(); ++i) ss << (i ? "," : "") << offsets[i];
        ss << "}";
    }
    if (family == "subdivided-complete") ss << ", edge_index=" << edge_index;
    if (family == "random-regular") ss << ", seed=" << seed;
    ss << ")";
    return ss.str();
}

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> families = {
        "cycle",     "complete",       "path",
        "star",      "harary",         "circulant",
        "random-regular", "subdivided-complete"};
    return families;
}

} // namespace reklab::gen
