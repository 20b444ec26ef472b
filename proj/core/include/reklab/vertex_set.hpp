#pragma once

#include "reklab/errors.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace reklab {

// Subset of the vertices 0..n-1 of a graph of fixed order n.
// Backed by 64-bit blocks; bits above the universe are always zero, so
// block-wise equality coincides with set equality.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(check_universe(universe)), blocks_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet from_vertices(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& b : s.blocks_) b = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        return (blocks_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check_vertex(v);
        blocks_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_vertex(v);
        blocks_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto b : blocks_) c += std::popcount(b);
        return c;
    }

    bool empty() const {
        for (auto b : blocks_)
            if (b) return false;
        return true;
    }

    bool is_full() const { return count() == n_; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < blocks_.size(); ++i) s.blocks_[i] = ~blocks_[i];
        s.trim();
        return s;
    }

    // Smallest member >= pos, or -1 if none.
    int next(int pos) const {
        if (pos >= n_) return -1;
        if (pos < 0) pos = 0;
        std::size_t bi = static_cast<std::size_t>(pos) >> 6;
        std::uint64_t b = blocks_[bi] & (~std::uint64_t{0} << (pos & 63));
        while (true) {
            if (b) return static_cast<int>((bi << 6) + std::countr_zero(b));
            if (++bi >= blocks_.size()) return -1;
            b = blocks_[bi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static int check_universe(int n) {
        if (n < 0) throw input_error("vertex set universe must be nonnegative");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }

    void trim() {
        if (n_ & 63) blocks_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !blocks_.empty()) blocks_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

// True when a's members, read as a sorted list, precede b's lexicographically.
// Used as the deterministic tie-break among equal-value cut witnesses.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    int i = a.next(0), j = b.next(0);
    while (i >= 0 && j >= 0) {
        if (i != j) return i < j;
        i = a.next(i + 1);
        j = b.next(j + 1);
    }
    return j >= 0; // a ran out first: proper prefix
}

} // namespace reklab
