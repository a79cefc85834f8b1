#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace graphon {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n) on a worker pool. Each index owns its slot of
/// whatever the caller writes to, so results are index-ordered and identical
/// for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(threads, n));
    pool.reserve(spawn);
    for (int k = 0; k < spawn; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace graphon
