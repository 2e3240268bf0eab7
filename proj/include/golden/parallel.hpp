#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace golden {

// Worker count: hardware concurrency, capped by GOLDEN_DISP_THREADS.
inline unsigned worker_threads() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GOLDEN_DISP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && static_cast<unsigned>(v) < n)
            n = static_cast<unsigned>(v);
    }
    return n;
}

// Runs fn(i) for every i in [0, n).  Indices are dealt round-robin so uneven
// per-index work spreads across workers; fn must only touch state owned by
// its own index, which keeps any ordered merge deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = worker_threads();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace golden
