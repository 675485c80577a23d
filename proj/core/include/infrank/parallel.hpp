#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace infrank {

/// Degree of parallelism for per-node work. 0 means "use all hardware threads".
struct Parallelism {
    unsigned threads = 1;

    unsigned resolved() const noexcept {
        if (threads != 0) return threads;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

/// Runs body(index, worker) for every index in [0, count).
///
/// Indices are handed out dynamically, so callers must not let results depend on
/// which worker processed an index. `worker` is in [0, workers(count, par)) and is
/// meant for indexing per-thread scratch space.
template <class Body>
void parallel_for(std::size_t count, Parallelism par, Body&& body) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(par.resolved(), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::size_t grain = std::max<std::size_t>(1, count / (static_cast<std::size_t>(workers) * 16));

    auto run = [&](unsigned worker) {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(grain, std::memory_order_relaxed);
                if (begin >= count) break;
                const std::size_t end = std::min(count, begin + grain);
                for (std::size_t i = begin; i < end; ++i) body(i, worker);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(count, std::memory_order_relaxed);
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
        run(0);
    }
    if (failure) std::rethrow_exception(failure);
}

/// Number of distinct `worker` values parallel_for will pass for this count.
inline unsigned worker_count(std::size_t count, Parallelism par) noexcept {
    return static_cast<unsigned>(std::min<std::size_t>(par.resolved(), std::max<std::size_t>(count, 1)));
}

}  // namespace infrank
