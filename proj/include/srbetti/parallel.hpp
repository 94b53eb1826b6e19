#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace srbetti {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into one contiguous chunk per worker and runs
// fn(worker_index, begin, end) on each. Results must be merged by the
// caller in worker order so output stays deterministic.
template <typename Fn>
void parallel_chunks(long long total, int threads, Fn&& fn) {
    long long cap = total == 0 ? 1 : total;
    threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, cap)));
    if (threads == 1) {
        fn(0, 0LL, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    long long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long long lo = std::min<long long>(total, t * chunk);
        long long hi = std::min<long long>(total, lo + chunk);
        pool.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace srbetti
