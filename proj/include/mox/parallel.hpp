// Copyright (c) 2026 The mox developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace mox {

// Worker count: MOX_THREADS in the environment, else 1 (deterministic default).
int default_threads();

// Evaluates fn(i) for i in [0, n) and returns the results in index order.
// Per-index result slots make the output independent of scheduling, so runs
// are byte-identical for any thread count.
template <class Fn>
auto parallel_map(std::size_t n, int threads, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using T = decltype(fn(std::size_t{0}));
    std::vector<T> out(n);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int nw = std::min<std::size_t>(threads, n);
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace mox
