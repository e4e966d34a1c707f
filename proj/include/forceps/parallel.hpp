#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace forceps {

/// Worker count from an explicit request, else FORCEPS_WORKERS, else the
/// hardware concurrency. Always at least 1.
int resolve_workers(int requested);

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// handed out in increasing order. The first exception thrown by any body is
/// rethrown after all threads join.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body)
{
    const std::size_t threads = std::min<std::size_t>(std::max(workers, 1), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        try {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
    }
    if (error) std::rethrow_exception(error);
}

} // namespace forceps
