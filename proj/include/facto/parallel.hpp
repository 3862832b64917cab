#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace facto {

// Static chunking over [0, n); results must be written to index-addressed
// slots so the outcome is independent of scheduling.
inline void parallel_for_index(std::size_t n, unsigned workers,
                               const std::function<void(std::size_t)>& body) {
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e] {
            for (std::size_t i = b; i < e; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace facto
