#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace arithlat {

// Worker cap: min(hardware, ARITHLAT_THREADS, tasks), at least 1.
inline int worker_count(int task_count) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ARITHLAT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return std::min(hw, std::max(task_count, 1));
}

// Runs fn(i) for i in [0, n). Each task writes only to its own slot, so the
// merged result is deterministic regardless of scheduling.
template <typename Fn>
void parallel_for_index(int n, Fn&& fn) {
    int workers = worker_count(n);
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace arithlat
