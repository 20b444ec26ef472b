#include "reklab/connectivity.hpp"

#include "flow.hpp"
#include "parallel.hpp"
#include "reklab/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <climits>
#include <cstdlib>
#include <thread>

namespace reklab {

std::string to_string(CutMethod m) {
    return m == CutMethod::flow ? "flow" : "oracle";
}

CutMethod cut_method_from_string(const std::string& name) {
    if (name == "flow") return CutMethod::flow;
    if (name == "oracle") return CutMethod::oracle;
    throw input_error("unknown method `" + name + "` (expected flow or oracle)");
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("REK_LAB_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

constexpr int kInfCap = 1 << 29;

// ---------------------------------------------------------------------------
// bitmask oracle

// True when every component of the induced subgraph on `mask` has >= k bits.
bool components_at_least(const std::vector<std::uint64_t>& adj, std::uint64_t mask, int k) {
    std::uint64_t rest = mask;
    while (rest) {
        std::uint64_t comp = rest & (~rest + 1); // lowest set bit
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & mask & ~comp;
            comp |= frontier;
        }
        if (std::popcount(comp) < k) return false;
        rest &= ~comp;
    }
    return true;
}

// True when some component of the induced subgraph on `mask` has exactly
// `size` bits.
bool has_component_of_size(const std::vector<std::uint64_t>& adj, std::uint64_t mask, int size) {
    std::uint64_t rest = mask;
    while (rest) {
        std::uint64_t comp = rest & (~rest + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & mask & ~comp;
            comp |= frontier;
        }
        if (std::popcount(comp) == size) return true;
        rest &= ~comp;
    }
    return false;
}

long long mask_boundary(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    long long value = 0;
    for (std::uint64_t m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        value += std::popcount(adj[v] & ~mask);
    }
    return value;
}

// Sorted-vertex-list lexicographic order on bitmasks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        const int i = std::countr_zero(a);
        const int j = std::countr_zero(b);
        if (i != j) return i < j;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
    return adj;
}

struct MaskCandidate {
    long long value = -1; // -1: no candidate yet
    std::uint64_t mask = 0;

    void offer(long long v, std::uint64_t m) {
        if (value < 0 || v < value || (v == value && mask_lex_less(m, mask))) {
            value = v;
            mask = m;
        }
    }

    void merge(const MaskCandidate& other) {
        if (other.value >= 0) offer(other.value, other.mask);
    }
};

CutResult cut_from_mask(const Graph& g, std::uint64_t mask) {
    VertexSet side(g.order());
    for (std::uint64_t m = mask; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        side.insert(v);
    }
    return boundary(g, side);
}

// Exhaustive minimum over bipartitions whose sides both split into
// components of order >= k. Enumerates only subsets containing vertex 0;
// the complement of any bipartition side contains it.
RestrictedCut oracle_impl(const Graph& g, int k, const EngineOptions& opts) {
    const int n = g.order();
    if (k < 1) throw input_error("restriction level k must be >= 1");
    const int limit = std::min(opts.oracle_limit, 62); // bitmask enumeration bound
    if (n > limit) throw oracle_limit_error(n, limit);
    if (n < 2) return RestrictedCut{k, std::nullopt};

    const auto adj = adjacency_masks(g);
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    const long long total = 1ll << (n - 1);
    const int threads = resolve_threads(opts.threads);

    std::vector<MaskCandidate> chunk_best(detail::chunk_count(total, threads));
    std::atomic<long long> best{LLONG_MAX};
    detail::run_chunks(total, threads, [&](long long ci, long long lo, long long hi) {
        MaskCandidate local;
        for (long long sub = lo; sub < hi; ++sub) {
            const std::uint64_t mask = (static_cast<std::uint64_t>(sub) << 1) | 1;
            if (mask == full) continue;
            const long long value = mask_boundary(adj, mask);
            // strict pruning only: equal-value candidates stay in play so the
            // lexicographic tie-break is schedule-independent
            if (value > best.load(std::memory_order_relaxed)) continue;
            if (k > 1 && !components_at_least(adj, mask, k)) continue;
            if (k > 1 && !components_at_least(adj, full & ~mask, k)) continue;
            local.offer(value, mask);
            detail::atomic_min(best, value);
        }
        chunk_best[ci] = local;
    });

    MaskCandidate final;
    for (const auto& c : chunk_best) final.merge(c);
    if (final.value < 0) return RestrictedCut{k, std::nullopt};
    return RestrictedCut{k, cut_from_mask(g, final.mask)};
}

// ---------------------------------------------------------------------------
// flow machinery

struct SideCandidate {
    long long value = -1;
    VertexSet side; // canonical: contains vertex 0

    void offer(long long v, VertexSet s) {
        if (value < 0 || v < value || (v == value && lex_less(s, side))) {
            value = v;
            side = std::move(s);
        }
    }

    void merge(const SideCandidate& other) {
        if (other.value >= 0) offer(other.value, other.side);
    }
};

detail::Dinic base_network(const Graph& g) {
    detail::Dinic net;
    net.init(g.order() + 2);
    for (const auto& [u, v] : g.to_edge_list()) net.add_pair(u, v, 1, 1);
    return net;
}

// Anchor sets for the contraction pairs: for k=2 the edges, for k=3 the
// connected triples. Sets are stored padded with -1.
using Anchor = std::array<int, 3>;

bool anchors_overlap(const Anchor& a, const Anchor& b) {
    for (int x : a) {
        if (x < 0) continue;
        for (int y : b)
            if (x == y) return true;
    }
    return false;
}

// One max-flow query with A forced to the source side and B to the sink
// side. Returns the cut value, or >= cutoff when aborted. `side` receives
// the canonical witness side (the one containing vertex 0).
long long pair_cut(detail::Dinic& net, const Graph& g, const Anchor& a, const Anchor& b,
                   long long cutoff, std::vector<char>& side_buf, VertexSet& side_out) {
    const int s = g.order(), t = g.order() + 1;
    net.reset();
    const std::size_t mark = net.mark();
    for (int v : a)
        if (v >= 0) net.add_pair(s, v, kInfCap, 0);
    for (int v : b)
        if (v >= 0) net.add_pair(v, t, kInfCap, 0);
    const long long flow = net.max_flow(s, t, cutoff);
    if (flow < cutoff) {
        net.source_side(s, side_buf);
        VertexSet side(g.order());
        for (int v = 0; v < g.order(); ++v)
            if (side_buf[v]) side.insert(v);
        // vertex 0 sits in B, hence on the sink side; the canonical witness
        // is the complement
        side_out = side.contains(0) ? side : side.complement();
    }
    net.rollback(mark);
    return flow;
}

// Minimum over anchored pairs (A, B) with B containing vertex 0. The side
// of any minimum k-restricted cut away from vertex 0 contains a connected
// k-set, and the side holding vertex 0 contains one through vertex 0, so
// these pairs reach every optimal cut.
RestrictedCut flow_impl(const Graph& g, int k, const EngineOptions& opts) {
    const int n = g.order();

    const auto comps = components(g);
    if (comps.size() != 1) {
        for (const auto& c : comps)
            if (c.count() < k) return RestrictedCut{k, std::nullopt};
        // the empty edge set already separates components of order >= k
        CutResult cut;
        cut.side_x = comps[0];
        cut.value = 0;
        return RestrictedCut{k, cut};
    }

    std::vector<Anchor> a_sets, b_sets;
    if (k == 2) {
        for (const auto& [u, v] : g.to_edge_list()) a_sets.push_back({u, v, -1});
        for (int w : g.neighbors(0)) b_sets.push_back({0, w, -1});
    } else {
        for (const auto& t : connected_triples(g)) a_sets.push_back({t[0], t[1], t[2]});
        for (const auto& t : connected_triples_through(g, 0)) b_sets.push_back({t[0], t[1], t[2]});
    }

    SideCandidate seed;
    {
        // cheapest single-anchor boundary that is already a valid cut; gives
        // the cutoff a tight start
        const Anchor* cheapest = nullptr;
        long long cheapest_value = LLONG_MAX;
        for (const auto& a : a_sets) {
            long long bval = 0;
            for (int v : a)
                if (v >= 0) bval += g.degree(v);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = i + 1; j < a.size(); ++j)
                    if (a[i] >= 0 && a[j] >= 0 && g.adjacent(a[i], a[j])) bval -= 2;
            if (bval < cheapest_value) {
                cheapest_value = bval;
                cheapest = &a;
            }
        }
        if (cheapest) {
            VertexSet side(n);
            for (int v : *cheapest)
                if (v >= 0) side.insert(v);
            const VertexSet rest = side.complement();
            bool valid = !rest.empty();
            if (valid)
                for (const auto& c : components(induced_subgraph(g, rest).graph))
                    if (c.count() < k) valid = false;
            if (valid) seed.offer(cheapest_value, side.contains(0) ? side : rest);
        }
    }

    const long long total = static_cast<long long>(a_sets.size()) * b_sets.size();
    const int threads = resolve_threads(opts.threads);
    std::vector<SideCandidate> chunk_best(detail::chunk_count(total, threads));
    std::atomic<long long> best{seed.value >= 0 ? seed.value : LLONG_MAX};
    const detail::Dinic base = base_network(g);

    detail::run_chunks(total, threads, [&](long long ci, long long lo, long long hi) {
        detail::Dinic net = base;
        std::vector<char> side_buf;
        VertexSet side;
        SideCandidate local;
        for (long long idx = lo; idx < hi; ++idx) {
            const Anchor& a = a_sets[idx / b_sets.size()];
            const Anchor& b = b_sets[idx % b_sets.size()];
            if (anchors_overlap(a, b)) continue;
            long long limit = best.load(std::memory_order_relaxed);
            limit = limit == LLONG_MAX ? LLONG_MAX : limit + 1;
            const long long flow = pair_cut(net, g, a, b, limit, side_buf, side);
            if (flow >= limit) continue; // aborted: strictly worse than best
            local.offer(flow, side);
            detail::atomic_min(best, flow);
        }
        chunk_best[ci] = local;
    });

    SideCandidate final = seed;
    for (const auto& c : chunk_best) final.merge(c);
    if (final.value < 0) return RestrictedCut{k, std::nullopt};

    CutResult cut = boundary(g, final.side);
    assert(cut.value == final.value);
    return RestrictedCut{k, cut};
}

} // namespace

// ---------------------------------------------------------------------------
// public operations

CutResult lambda_cut(const Graph& g, const EngineOptions& opts) {
    const int n = g.order();
    if (n < 2) throw input_error("edge-connectivity requires order >= 2");

    const auto comps = components(g);
    if (comps.size() != 1) {
        CutResult cut;
        cut.side_x = comps[0];
        cut.value = 0;
        return cut;
    }

    const long long total = n - 1;
    const int threads = resolve_threads(opts.threads);
    std::vector<SideCandidate> chunk_best(detail::chunk_count(total, threads));
    std::atomic<long long> best{LLONG_MAX};
    const detail::Dinic base = base_network(g);

    detail::run_chunks(total, threads, [&](long long ci, long long lo, long long hi) {
        detail::Dinic net = base;
        std::vector<char> side_buf;
        SideCandidate local;
        for (long long i = lo; i < hi; ++i) {
            const int t = static_cast<int>(i) + 1;
            long long limit = best.load(std::memory_order_relaxed);
            limit = limit == LLONG_MAX ? LLONG_MAX : limit + 1;
            net.reset();
            const long long flow = net.max_flow(0, t, limit);
            if (flow >= limit) continue;
            net.source_side(0, side_buf);
            VertexSet side(n);
            for (int v = 0; v < n; ++v)
                if (side_buf[v]) side.insert(v);
            local.offer(flow, std::move(side));
            detail::atomic_min(best, flow);
        }
        chunk_best[ci] = local;
    });

    SideCandidate final;
    for (const auto& c : chunk_best) final.merge(c);
    CutResult cut = boundary(g, final.side);
    assert(cut.value == final.value);
    return cut;
}

long long lambda(const Graph& g) {
    return lambda_cut(g).value;
}

CutResult min_st_cut(const MultiGraph& g, int s, int t) {
    const int n = g.order();
    if (s < 0 || s >= n || t < 0 || t >= n) throw input_error("s/t out of range");
    if (s == t) throw input_error("min_st_cut requires s != t");

    detail::Dinic net;
    net.init(n);
    for (const auto& [u, v, mult] : g.to_edge_list()) net.add_pair(u, v, mult, mult);
    const long long flow = net.max_flow(s, t, LLONG_MAX);

    std::vector<char> side_buf;
    net.source_side(s, side_buf);
    CutResult cut;
    cut.side_x = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (side_buf[v]) cut.side_x.insert(v);
    for (const auto& [u, v, mult] : g.to_edge_list())
        if (side_buf[u] != side_buf[v])
            for (int i = 0; i < mult; ++i) cut.edges.emplace_back(u, v);
    std::sort(cut.edges.begin(), cut.edges.end());
    cut.value = flow;
    assert(cut.value == static_cast<long long>(cut.edges.size()));
    return cut;
}

RestrictedCut lambda2(const Graph& g, CutMethod method, const EngineOptions& opts) {
    if (g.order() < 4) throw input_error("lambda2 requires order >= 4");
    return method == CutMethod::oracle ? oracle_impl(g, 2, opts) : flow_impl(g, 2, opts);
}

RestrictedCut lambda3(const Graph& g, CutMethod method, const EngineOptions& opts) {
    return method == CutMethod::oracle ? oracle_impl(g, 3, opts) : flow_impl(g, 3, opts);
}

RestrictedCut lambda_k_oracle(const Graph& g, int k, const EngineOptions& opts) {
    return oracle_impl(g, k, opts);
}

RestrictedCut restricted_connectivity(const Graph& g, int k, CutMethod method,
                                      const EngineOptions& opts) {
    if (k < 1) throw input_error("restriction level k must be >= 1");
    if (k == 1) {
        if (method == CutMethod::oracle) return oracle_impl(g, 1, opts);
        return RestrictedCut{1, lambda_cut(g, opts)};
    }
    if (k == 2) return lambda2(g, method, opts);
    if (k == 3) return lambda3(g, method, opts);
    if (method == CutMethod::flow)
        throw input_error("flow method supports k in {1,2,3}; use the oracle for k >= 4");
    return oracle_impl(g, k, opts);
}

std::optional<TriplePair> find_disjoint_triples(const Graph& g) {
    const auto triples = connected_triples(g);
    if (triples.size() < 2) return std::nullopt;

    // a vertex common to all triples rules out any disjoint pair, and such a
    // vertex must lie in the first triple
    for (int c : triples[0]) {
        bool common = true;
        for (const auto& t : triples)
            if (t[0] != c && t[1] != c && t[2] != c) {
                common = false;
                break;
            }
        if (common) return std::nullopt;
    }

    for (std::size_t i = 0; i < triples.size(); ++i) {
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
            const auto& a = triples[i];
            const auto& b = triples[j];
            bool overlap = false;
            for (int x : a)
                for (int y : b)
                    if (x == y) overlap = true;
            if (!overlap) return TriplePair{a, b};
        }
    }
    return std::nullopt;
}

bool has_3_restricted_cut(const Graph& g) {
    return find_disjoint_triples(g).has_value();
}

// ---------------------------------------------------------------------------
// classifiers

std::string to_string(GraphProperty p) {
    switch (p) {
        case GraphProperty::maximally_edge_connected: return "maximally-edge-connected";
        case GraphProperty::super_edge_connected: return "super-edge-connected";
        case GraphProperty::maximally_restricted: return "maximally-restricted";
        case GraphProperty::super_restricted: return "super-restricted";
        case GraphProperty::maximally_3_restricted: return "maximally-3-restricted";
        case GraphProperty::super_3_restricted: return "super-3-restricted";
    }
    return "?";
}

GraphProperty graph_property_from_string(const std::string& name) {
    for (GraphProperty p :
         {GraphProperty::maximally_edge_connected, GraphProperty::super_edge_connected,
          GraphProperty::maximally_restricted, GraphProperty::super_restricted,
          GraphProperty::maximally_3_restricted, GraphProperty::super_3_restricted})
        if (to_string(p) == name) return p;
    throw input_error("unknown graph property `" + name + "`");
}

namespace {

ClassifierVerdict not_applicable(GraphProperty p, std::string why) {
    ClassifierVerdict v;
    v.property = p;
    v.applicable = false;
    v.note = std::move(why);
    return v;
}

// Every bipartition with both sides' components >= k and boundary == target
// must leave a component of order exactly `k` somewhere. Returns the first
// violating cut, if any.
std::optional<CutResult> super_counterexample(const Graph& g, int k, long long target,
                                              const EngineOptions& opts) {
    const int n = g.order();
    const int limit = std::min(opts.oracle_limit, 62);
    if (n > limit) throw oracle_limit_error(n, limit);
    const auto adj = adjacency_masks(g);
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (n - 1)); ++sub) {
        const std::uint64_t mask = (sub << 1) | 1;
        if (mask == full) continue;
        if (mask_boundary(adj, mask) != target) continue;
        const std::uint64_t rest = full & ~mask;
        if (k > 1 && (!components_at_least(adj, mask, k) || !components_at_least(adj, rest, k)))
            continue;
        if (!has_component_of_size(adj, mask, k) && !has_component_of_size(adj, rest, k))
            return cut_from_mask(g, mask);
    }
    return std::nullopt;
}

} // namespace

ClassifierVerdict classify(const Graph& g, GraphProperty property, const EngineOptions& opts) {
    const int n = g.order();
    const bool big = n > opts.oracle_limit;
    const CutMethod budget_method = big ? CutMethod::flow : CutMethod::oracle;

    ClassifierVerdict v;
    v.property = property;

    switch (property) {
        case GraphProperty::maximally_edge_connected: {
            if (n < 2) return not_applicable(property, "lambda undefined for order < 2");
            CutResult cut = lambda_cut(g, opts);
            v.computed = cut.value;
            v.reference = min_degree(g);
            v.holds = (*v.computed == *v.reference);
            v.certificate = std::move(cut);
            v.note = "lambda vs delta";
            return v;
        }
        case GraphProperty::super_edge_connected: {
            if (n < 2 || !is_connected(g))
                return not_applicable(property, "requires a connected graph of order >= 2");
            CutResult cut = lambda_cut(g, opts);
            v.computed = cut.value;
            if (auto bad = super_counterexample(g, 1, cut.value, opts)) {
                v.holds = false;
                v.certificate = std::move(*bad);
                v.note = "minimum cut that does not isolate a vertex";
            } else {
                v.holds = true;
                v.certificate = std::move(cut);
                v.note = "every minimum edge-cut isolates a vertex";
            }
            return v;
        }
        case GraphProperty::maximally_restricted:
        case GraphProperty::super_restricted: {
            if (n < 4) return not_applicable(property, "lambda2 undefined for order < 4");
            const auto xiv = xi(g);
            RestrictedCut rc = lambda2(
                g, property == GraphProperty::super_restricted ? CutMethod::oracle : budget_method,
                opts);
            if (rc.infinite()) return not_applicable(property, "lambda2 is +infinity");
            v.computed = rc.value();
            if (property == GraphProperty::maximally_restricted) {
                if (!xiv) return not_applicable(property, "xi undefined");
                v.reference = *xiv;
                v.holds = (*v.computed == *v.reference);
                v.certificate = rc.cut;
                v.note = "lambda2 vs xi";
            } else if (auto bad = super_counterexample(g, 2, rc.value(), opts)) {
                v.holds = false;
                v.certificate = std::move(*bad);
                v.note = "minimum restricted cut that does not isolate an edge";
            } else {
                v.holds = true;
                v.certificate = rc.cut;
                v.note = "every minimum restricted edge-cut isolates an edge";
            }
            return v;
        }
        case GraphProperty::maximally_3_restricted:
        case GraphProperty::super_3_restricted: {
            const auto xi3v = xi3(g);
            RestrictedCut rc = lambda3(
                g,
                property == GraphProperty::super_3_restricted ? CutMethod::oracle : budget_method,
                opts);
            if (rc.infinite()) return not_applicable(property, "lambda3 is +infinity");
            v.computed = rc.value();
            if (property == GraphProperty::maximally_3_restricted) {
                if (!xi3v) return not_applicable(property, "xi3 undefined");
                v.reference = xi3v->value;
                v.holds = (*v.computed == *v.reference);
                v.certificate = rc.cut;
                v.note = "lambda3 vs xi3";
            } else if (auto bad = super_counterexample(g, 3, rc.value(), opts)) {
                v.holds = false;
                v.certificate = std::move(*bad);
                v.note = "minimum 3-restricted cut that does not isolate an order-3 component";
            } else {
                v.holds = true;
                v.certificate = rc.cut;
                v.note = "every minimum 3-restricted edge-cut isolates an order-3 component";
            }
            return v;
        }
    }
    throw input_error("unknown graph property");
}

} // namespace reklab
