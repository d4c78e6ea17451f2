#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace plyfold {

/// Worker count: PLYFOLD_THREADS if set, hardware concurrency otherwise.
inline unsigned thread_count() {
    if (const char* env = std::getenv("PLYFOLD_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Static block partition of [0, n). Each index is processed exactly once
/// and tasks write only to their own slots, so results do not depend on
/// the thread count.
template <typename F>
void parallel_for(size_t n, F&& body) {
    const unsigned workers = std::min<size_t>(thread_count(), n ? n : 1);
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace plyfold
