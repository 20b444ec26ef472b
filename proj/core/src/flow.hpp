#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace reklab::detail {

// Dinic max-flow over an explicit arc list with paired reverse arcs (i ^ 1).
// One network serves many (s, t) queries on the same base graph: terminal
// arcs appended after mark() can be rolled back, and reset() restores all
// capacities.
class Dinic {
public:
    void init(int n) {
        adj_.assign(n, {});
        to_.clear();
        cap_.clear();
        base_cap_.clear();
        level_.assign(n, -1);
        iter_.assign(n, 0);
    }

    int node_count() const { return static_cast<int>(adj_.size()); }

    // Arc u->v with capacity cap_fwd paired with v->u at cap_bwd. An
    // undirected unit edge is add_pair(u, v, c, c); a directed arc uses
    // cap_bwd = 0.
    void add_pair(int u, int v, int cap_fwd, int cap_bwd) {
        adj_[u].push_back(static_cast<int>(to_.size()));
        to_.push_back(v);
        cap_.push_back(cap_fwd);
        base_cap_.push_back(cap_fwd);
        adj_[v].push_back(static_cast<int>(to_.size()));
        to_.push_back(u);
        cap_.push_back(cap_bwd);
        base_cap_.push_back(cap_bwd);
    }

    std::size_t mark() const { return to_.size(); }

    // Removes every arc added after `mark`. Arcs are appended to the adjacency
    // lists in creation order, so they are the trailing entries of their lists.
    void rollback(std::size_t mark) {
        for (std::size_t e = to_.size(); e > mark; e -= 2) {
            const int v = to_[e - 1];
            const int u = to_[e - 2];
            adj_[v].pop_back();
            adj_[u].pop_back();
        }
        to_.resize(mark);
        cap_.resize(mark);
        base_cap_.resize(mark);
    }

    void reset() { cap_ = base_cap_; }

    // Max flow from s to t, aborting once the accumulated flow reaches
    // `cutoff`; the return value is then a lower bound on the true value.
    long long max_flow(int s, int t, long long cutoff) {
        long long flow = 0;
        while (flow < cutoff && bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (flow < cutoff) {
                const long long pushed = dfs(s, t, cutoff - flow);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    // After max_flow: marks the residual-reachable set from s.
    void source_side(int s, std::vector<char>& side) const {
        side.assign(adj_.size(), 0);
        std::vector<int> queue{s};
        side[s] = 1;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (int e : adj_[v]) {
                if (cap_[e] > 0 && !side[to_[e]]) {
                    side[to_[e]] = 1;
                    queue.push_back(to_[e]);
                }
            }
        }
    }

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        queue_.clear();
        queue_.push_back(s);
        level_[s] = 0;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int v = queue_[head];
            for (int e : adj_[v]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[v] + 1;
                    queue_.push_back(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            const int e = adj_[v][i];
            const int w = to_[e];
            if (cap_[e] <= 0 || level_[w] != level_[v] + 1) continue;
            const long long pushed = dfs(w, t, std::min<long long>(limit, cap_[e]));
            if (pushed > 0) {
                cap_[e] -= static_cast<int>(pushed);
                cap_[e ^ 1] += static_cast<int>(pushed);
                return pushed;
            }
        }
        level_[v] = -1;
        return 0;
    }

    std::vector<int> to_, cap_, base_cap_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_, iter_;
    std::vector<int> queue_;
};

} // namespace reklab::detail
