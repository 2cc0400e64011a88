#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace qce {

// Maps indices 0..count-1 through `work` concurrently, each result landing in
// its own slot so the output order never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& work) {
    std::vector<T> results(count);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) {
            results[i] = work(i);
        }
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) {
                results[i] = work(i);
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    return results;
}

}  // namespace qce
