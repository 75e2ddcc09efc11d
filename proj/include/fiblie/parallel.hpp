#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace fiblie {

/// Worker cap: FIBLIE_THREADS when set (>= 1), else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("FIBLIE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(d) for d in [lo, hi], degree slices striped over the worker budget.
/// fn must only write to per-degree slots; results stay deterministic.
template <typename Fn>
void for_each_degree(std::int64_t lo, std::int64_t hi, Fn&& fn) {
    if (lo > hi)
        return;
    unsigned workers = thread_budget();
    std::int64_t count = hi - lo + 1;
    if (workers <= 1 || count <= 1) {
        for (std::int64_t d = lo; d <= hi; ++d)
            fn(d);
        return;
    }
    if (static_cast<std::int64_t>(workers) > count)
        workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            for (std::int64_t d = lo + static_cast<std::int64_t>(t); d <= hi;
                 d += static_cast<std::int64_t>(workers))
                fn(d);
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace fiblie
