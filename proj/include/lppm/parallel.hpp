#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lppm {

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Results must be written to pre-sized slots indexed by i so
// that output never depends on scheduling. The first exception thrown by any
// worker is rethrown after all workers join.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    int workers = threads > 0 ? threads : hw;
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace lppm
