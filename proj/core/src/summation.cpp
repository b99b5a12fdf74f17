#include "rf/summation.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace rf {

namespace {

std::atomic<unsigned> g_thread_cap{0};

unsigned env_thread_cap() {
    static const unsigned cached = [] {
        const char* env = std::getenv("RF_THREADS");
        if (env == nullptr) return 0u;
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end == env || v == 0) return 0u;
        return static_cast<unsigned>(v);
    }();
    return cached;
}

}  // namespace

void set_thread_cap(unsigned cap) { g_thread_cap.store(cap, std::memory_order_relaxed); }

unsigned thread_cap() {
    const unsigned explicit_cap = g_thread_cap.load(std::memory_order_relaxed);
    if (explicit_cap != 0) return explicit_cap;
    const unsigned env_cap = env_thread_cap();
    if (env_cap != 0) return env_cap;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& body) {
    if (n == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(thread_cap(), n));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= n) break;
                body(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace rf
