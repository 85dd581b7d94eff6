#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace icdof {

// Default worker count: ICDOF_THREADS environment variable, else 1.
inline int env_thread_count() {
    if (const char* s = std::getenv("ICDOF_THREADS")) {
        const int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 1;
}

// Splits [0, total) into fixed-size blocks, evaluates block_fn on each and
// folds the partial results in block-index order. The block layout does not
// depend on the thread count, so the folded result is bit-identical whether
// run with 1 thread or many.
//
//   block_fn : (int64 lo, int64 hi) -> Partial
//   merge    : (Partial& acc, const Partial& part) -> void
template <class Partial, class BlockFn, class MergeFn>
Partial parallel_blocks(std::int64_t total, int threads, Partial init,
                        BlockFn block_fn, MergeFn merge,
                        std::int64_t block_size = 8192) {
    if (total <= 0) return init;
    const std::int64_t nblocks = (total + block_size - 1) / block_size;
    if (threads <= 1 || nblocks == 1) {
        Partial acc = std::move(init);
        for (std::int64_t b = 0; b < nblocks; ++b) {
            const std::int64_t lo = b * block_size;
            const std::int64_t hi = std::min(total, lo + block_size);
            const Partial part = block_fn(lo, hi);
            merge(acc, part);
        }
        return acc;
    }

    std::vector<Partial> parts(static_cast<std::size_t>(nblocks), init);
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= nblocks) break;
            const std::int64_t lo = b * block_size;
            const std::int64_t hi = std::min(total, lo + block_size);
            parts[static_cast<std::size_t>(b)] = block_fn(lo, hi);
        }
    };

    const int nw = static_cast<int>(
        std::min<std::int64_t>(static_cast<std::int64_t>(threads), nblocks));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    Partial acc = std::move(init);
    for (const auto& p : parts) merge(acc, p);
    return acc;
}

}  // namespace icdof
