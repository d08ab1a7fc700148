#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cdl {

// Process-wide worker count for pairwise sums; 1 = fully deterministic.
int thread_count();
void set_thread_count(int n);

// Splits [0, n) into contiguous chunks, one worker per chunk; partial results
// are combined in chunk order, so totals are reproducible for a fixed count.
template <typename T, typename Fn, typename Combine>
T parallel_reduce(long n, T init, Fn&& chunk_fn, Combine&& combine) {
    int nt = thread_count();
    if (nt <= 1 || n < 1024) return chunk_fn(0L, n);
    nt = static_cast<int>(std::min<long>(nt, n));
    std::vector<T> parts(nt, init);
    std::vector<std::thread> workers;
    long chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        long lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, t, lo, hi] { parts[t] = chunk_fn(lo, hi); });
    }
    for (auto& w : workers) w.join();
    T acc = init;
    for (const auto& p : parts) acc = combine(acc, p);
    return acc;
}

}  // namespace cdl
