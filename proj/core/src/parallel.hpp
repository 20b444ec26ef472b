#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace reklab::detail {

inline long long chunk_count(long long count, int threads) {
    if (count <= 0) return 0;
    return std::min<long long>(count, static_cast<long long>(std::max(1, threads)) * 16);
}

// Runs body(chunk_index, begin, end) over the index range [0, count), split
// into chunk_count(count, threads) chunks handed to `threads` workers.
// Callers keep per-chunk state indexed by chunk_index and merge it in chunk
// order afterwards, which keeps results independent of scheduling.
template <class Body>
void run_chunks(long long count, int threads, Body&& body) {
    const long long chunks = chunk_count(count, threads);
    if (chunks <= 0) return;
    const long long chunk_size = (count + chunks - 1) / chunks;
    const int workers = std::max(1, threads);

    if (workers == 1 || chunks == 1) {
        for (long long c = 0; c < chunks; ++c)
            body(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
        return;
    }

    std::atomic<long long> next{0};
    auto work = [&] {
        for (long long c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
            body(c, c * chunk_size, std::min(count, (c + 1) * chunk_size));
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

// Atomically lowers `best` to `value` when value is smaller.
inline void atomic_min(std::atomic<long long>& best, long long value) {
    long long cur = best.load(std::memory_order_relaxed);
    while (value < cur && !best.compare_exchange_weak(cur, value)) {
    }
}

} // namespace reklab::detail
