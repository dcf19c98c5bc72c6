#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace couette {

/// Worker count: hardware concurrency capped by COUETTE3D_THREADS.
inline int max_threads() {
    int n = int(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("COUETTE3D_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

/// Static block partition of [0, n); each worker owns a contiguous range, so
/// per-index writes are race-free and results are thread-count independent.
inline void parallel_for(int n, const std::function<void(int, int)>& body) {
    const int nw = std::min(max_threads(), n > 0 ? n : 1);
    if (nw <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nw);
    const int chunk = (n + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back(body, lo, hi);
    }
    for (auto& th : workers) th.join();
}

}  // namespace couette
