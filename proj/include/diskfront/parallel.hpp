#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace diskfront {

/// Worker count: DISKFRONT_THREADS if set (values < 1 mean 1), otherwise the
/// hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("DISKFRONT_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Static index partition; each index is processed exactly once, and results
/// written by index stay deterministic regardless of the worker count.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const unsigned workers = thread_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace diskfront
