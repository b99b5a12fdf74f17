#pragma once

// Deterministic reductions. Every floating-point sum in this library goes
// through the same fixed cascade: inputs are split into chunks of
// sum_chunk_size, each chunk is reduced by pairwise (cascade) summation,
// and the chunk results are pairwise-reduced in chunk order. Chunk
// boundaries and the reduction tree never depend on the worker count, so
// results are bit-identical whether a sum runs on 1 thread or many.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rf {

inline constexpr std::size_t sum_chunk_size = 65536;

// Worker cap for parallel reductions: explicit set_thread_cap() wins over
// the RF_THREADS environment variable, which wins over the hardware count.
// A cap of 0 restores the default resolution order.
void set_thread_cap(unsigned cap);
unsigned thread_cap();

// Runs body(i) for i in [0, n). Order of execution is unspecified; callers
// must write to disjoint slots.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& body);

template <class T>
T pairwise_sum(std::span<const T> xs) {
    if (xs.size() <= 32) {
        T acc{};
        for (const T& x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& xs) {
    return pairwise_sum(std::span<const T>(xs));
}

// Sum of f(i) for i in [0, n), f pure. Chunks may be evaluated
// concurrently; the combine tree is fixed.
template <class T, class F>
T chunked_sum(std::uint64_t n, F&& f) {
    if (n == 0) return T{};
    const std::uint64_t chunks = (n + sum_chunk_size - 1) / sum_chunk_size;
    if (chunks == 1) {
        std::vector<T> buf;
        buf.reserve(static_cast<std::size_t>(n));
        for (std::uint64_t i = 0; i < n; ++i) buf.push_back(f(i));
        return pairwise_sum(std::span<const T>(buf));
    }
    std::vector<T> partial(static_cast<std::size_t>(chunks));
    parallel_for(chunks, [&](std::uint64_t c) {
        const std::uint64_t lo = c * sum_chunk_size;
        const std::uint64_t hi = std::min(n, lo + sum_chunk_size);
        std::vector<T> buf;
        buf.reserve(static_cast<std::size_t>(hi - lo));
        for (std::uint64_t i = lo; i < hi; ++i) buf.push_back(f(i));
        partial[static_cast<std::size_t>(c)] = pairwise_sum(std::span<const T>(buf));
    });
    return pairwise_sum(std::span<const T>(partial));
}

}  // namespace rf
