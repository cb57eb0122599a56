#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace kolmo {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over a static partition of [0, n). Safe only for
// disjoint writes; no reduction semantics here.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        fn(std::size_t{0}, n);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

// Reduction blocks are a fixed size, independent of the thread count: workers
// fill per-block partials, which are then combined sequentially in block
// order. Results are therefore bitwise identical for any --threads value.
inline constexpr std::size_t kReductionBlock = 1024;

// acc must accumulate items [begin, end) in ascending order into its partial
// slot; combine folds the per-block partials in ascending block order.
template <class Partial, class Acc, class Combine>
void blocked_reduce(std::size_t n, int threads, const Partial& init, Acc&& acc, Combine&& combine) {
    const std::size_t nblocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<Partial> partials(nblocks, init);
    parallel_for(nblocks, threads, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t b = b0; b < b1; ++b) {
            const std::size_t begin = b * kReductionBlock;
            const std::size_t end = std::min(n, begin + kReductionBlock);
            acc(partials[b], begin, end);
        }
    });
    for (std::size_t b = 0; b < nblocks; ++b) combine(partials[b]);
}

} // namespace kolmo
