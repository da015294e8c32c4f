#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace cdbent {

inline unsigned default_workers() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Block-partitioned indexed loop. Workers read shared immutable inputs and
/// must write only disjoint slots; fn must not throw.
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn&& fn) {
    if (end <= begin) return;
    const std::uint64_t count = end - begin;
    std::uint64_t w = std::min<std::uint64_t>(workers ? workers : default_workers(), count);
    if (w <= 1) {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::uint64_t chunk = (count + w - 1) / w;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::uint64_t t = 0; t < w; ++t) {
        std::uint64_t lo = begin + t * chunk;
        std::uint64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cdbent
