#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace absrr {

/// Worker count: hardware concurrency capped by the ABSRR_THREADS
/// environment variable (a value of 0 or garbage is ignored).
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ABSRR_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            n = static_cast<unsigned>(std::min<long>(v, static_cast<long>(n)));
    }
    return n;
}

/// Runs fn(i) for i in [0, count) across workers in contiguous blocks.
/// Results must be written into preallocated per-index slots so output
/// order stays independent of scheduling. The first exception is rethrown.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t block = std::max<std::size_t>(1, count / (workers * 8));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t begin = next.fetch_add(block);
                if (begin >= count)
                    return;
                std::size_t end = std::min(count, begin + block);
                try {
                    for (std::size_t i = begin; i < end; ++i)
                        fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace absrr
