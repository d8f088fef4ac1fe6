// SPDX-License-Identifier: Apache-2.0
//
// Block-parallel execution with deterministic assembly: work is split
// into fixed blocks identified by index, each worker claims blocks from
// an atomic counter, and callers combine per-block results in index
// order afterwards.  Values therefore never depend on the thread count.

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace wppas::detail {

template <class Fn>
void parallel_for_blocks(std::size_t n_blocks, unsigned threads, Fn&& fn) {
    if (n_blocks == 0) return;
    unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    if (n_threads > n_blocks) n_threads = static_cast<unsigned>(n_blocks);
    if (n_threads == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t b = next.fetch_add(1);
                if (b >= n_blocks) break;
                fn(b);
            }
        });
    }
    for (auto& t : pool) t.join();
}

/// Kahan-compensated accumulator; per-block sums stay deterministic even
/// with long blocks.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

}  // namespace wppas::detail
