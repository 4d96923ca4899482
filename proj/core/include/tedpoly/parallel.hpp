#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tedpoly {

/** Worker count used when the caller passes 0. */
inline unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Runs body(i) for every i in [0, count) on up to `workers` threads.
 * Indices are handed out in increasing order; the first exception thrown by
 * any body is rethrown after all threads have joined.
 */
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    if (workers == 0)
        workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed))
        {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        threads.emplace_back(worker);
    threads.clear();

    if (error)
        std::rethrow_exception(error);
}

}   // namespace tedpoly
