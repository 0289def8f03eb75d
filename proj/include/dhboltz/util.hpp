#pragma once

#include <thread>
#include <vector>

namespace dhboltz {

/// Static range partition over [0, n). Each worker owns a contiguous index
/// block and writes only its own outputs, so results are identical for any
/// thread count.
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    const int nw = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / nw);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / nw);
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dhboltz
