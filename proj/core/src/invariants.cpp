#include "reklab/invariants.hpp"

#include <algorithm>
#include <unordered_set>

namespace reklab {

namespace {

void check_nonempty(const Graph& g) {
    if (g.order() == 0) throw input_error("degree extrema undefined for the empty graph");
}

std::array<int, 3> canonical(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

std::uint64_t triple_key(const std::array<int, 3>& t) {
    return (static_cast<std::uint64_t>(t[0]) << 42) | (static_cast<std::uint64_t>(t[1]) << 21) |
           static_cast<std::uint64_t>(t[2]);
}

} // namespace

int min_degree(const Graph& g) {
    check_nonempty(g);
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    check_nonempty(g);
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::optional<long long> xi(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    long long best = -1;
    for (const auto& [u, v] : g.to_edge_list()) {
        const long long d = g.degree(u) + g.degree(v) - 2;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

std::vector<std::array<int, 3>> connected_triples(const Graph& g) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::array<int, 3>> out;
    auto push = [&](int a, int b, int c) {
        auto t = canonical(a, b, c);
        if (seen.insert(triple_key(t)).second) out.push_back(t);
    };
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            for (int w : g.neighbors(u))
                if (w != v) push(u, v, w);
            for (int w : g.neighbors(v))
                if (w != u) push(u, v, w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> connected_triples_through(const Graph& g, int v) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::array<int, 3>> out;
    auto push = [&](int a, int b, int c) {
        auto t = canonical(a, b, c);
        if (seen.insert(triple_key(t)).second) out.push_back(t);
    };
    // center v: any two neighbors; end v: a neighbor plus one of its neighbors
    const auto& nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) push(v, nbrs[i], nbrs[j]);
    for (int u : nbrs)
        for (int w : g.neighbors(u))
            if (w != v) push(v, u, w);
    std::sort(out.begin(), out.end());
    return out;
}

long long triple_boundary(const Graph& g, const std::array<int, 3>& t) {
    long long deg_sum = 0;
    for (int v : t) deg_sum += g.degree(v);
    long long internal = 0;
    if (g.adjacent(t[0], t[1])) ++internal;
    if (g.adjacent(t[0], t[2])) ++internal;
    if (g.adjacent(t[1], t[2])) ++internal;
    return deg_sum - 2 * internal;
}

std::optional<Xi3Witness> xi3(const Graph& g) {
    if (g.order() < 3) return std::nullopt;
    std::optional<Xi3Witness> best;
    for (const auto& t : connected_triples(g)) {
        const long long b = triple_boundary(g, t);
        if (!best || b < best->value) best = Xi3Witness{b, t};
    }
    return best;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.min_degree = min_degree(g);
    p.max_degree = max_degree(g);
    p.xi = xi(g);
    if (auto w = xi3(g)) p.xi3 = w->value;
    return p;
}

long long xi3_strong_cycle_formula(long long delta, long long xi) {
    if (delta < 2) throw input_error("xi3 strong-cycle formula requires delta >= 2");
    if (xi < 2 * delta - 2)
        throw input_error("impossible degree profile: xi < 2*delta - 2");
    return xi == 2 * delta - 2 ? 9 * delta : 9 * delta + 2;
}

} // namespace reklab
