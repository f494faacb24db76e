#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lambdap::cli {

// Computes compute(0..count-1) on `workers` threads and hands each result to
// emit() on the calling thread in index order, as soon as it and all earlier
// results are ready. Output order never depends on the worker count.
template <typename Result>
void ordered_parallel(std::size_t count, unsigned workers, const std::function<Result(std::size_t)>& compute,
                      const std::function<void(Result&&)>& emit)
{
    if (count == 0) return;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t k = 0; k < count; ++k) emit(compute(k));
        return;
    }

    std::vector<std::optional<Result>> slots(count);
    std::mutex mutex;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                Result r = compute(k);
                {
                    std::lock_guard lock(mutex);
                    slots[k].emplace(std::move(r));
                }
                ready.notify_all();
            }
        });
    }
    for (std::size_t k = 0; k < count; ++k) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return slots[k].has_value(); });
        Result r = std::move(*slots[k]);
        slots[k].reset();
        lock.unlock();
        emit(std::move(r));
    }
}

} // namespace lambdap::cli
