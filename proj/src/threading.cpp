#include "cdl/threading.hpp"

#include <cstdlib>

namespace cdl {

namespace {
std::atomic<int> g_threads{0};  // 0 = uninitialized, read CDL_THREADS once
}

int thread_count() {
    int v = g_threads.load(std::memory_order_relaxed);
    if (v > 0) return v;
    int n = 1;
    if (const char* env = std::getenv("CDL_THREADS")) {
        n = std::atoi(env);
        if (n < 1) n = 1;
    }
    g_threads.store(n, std::memory_order_relaxed);
    return n;
}

void set_thread_count(int n) { g_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace cdl
