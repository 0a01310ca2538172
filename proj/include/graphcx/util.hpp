// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace graphcx {

// GRAPHCX_THREADS caps internal parallelism; unset means single-threaded.
inline int thread_budget() {
    const char* env = std::getenv("GRAPHCX_THREADS");
    if (env) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

// Index-parallel loop with deterministic result placement: fn(i) must write
// only to slot i of whatever it fills.
template <typename Fn>
inline void parallel_for(int n, Fn&& fn) {
    const int budget = std::min(thread_budget(), n);
    if (budget <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(budget);
    for (int t = 0; t < budget; ++t)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& w : workers) w.join();
}

} // namespace graphcx
