// parallel.hpp — static block partitioning over an index range.
#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace fsg {

inline int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Runs fn(lo, hi) over contiguous blocks of [0, count). Work is split the same
// way for a given (count, workers), so slot-indexed outputs are reproducible.
template <typename Fn>
void parallel_blocks(std::uint64_t count, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    const std::uint64_t w = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count == 0 ? 1 : count);
    if (w <= 1) {
        fn(std::uint64_t{0}, count);
        return;
    }
    const std::uint64_t chunk = (count + w - 1) / w;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w - 1));
    for (std::uint64_t t = 1; t < w; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(count, lo + chunk);
        if (lo < hi) threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    fn(std::uint64_t{0}, std::min(count, chunk));
    for (auto& th : threads) th.join();
}

}  // namespace fsg
