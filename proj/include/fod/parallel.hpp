#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fod {

/// Worker count to use: explicit request, else FOD_FORGE_THREADS, else the
/// hardware concurrency.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FOD_FORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, n) on `threads` workers, dynamic chunking.
/// Callers must ensure writes for distinct i never alias; under that
/// contract the result is independent of the thread count.
template <typename Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn, std::int64_t chunk = 1) {
    if (n <= 0) return;
    threads = resolve_threads(threads);
    if (threads == 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (chunk < 1) chunk = 1;
    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::int64_t begin = next.fetch_add(chunk);
            if (begin >= n) return;
            const std::int64_t end = std::min(begin + chunk, n);
            try {
                for (std::int64_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int spawned = static_cast<int>(std::min<std::int64_t>(threads, (n + chunk - 1) / chunk));
    pool.reserve(static_cast<std::size_t>(spawned));
    for (int t = 0; t < spawned; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace fod
