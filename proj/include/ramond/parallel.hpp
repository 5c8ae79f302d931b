#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ramond {

/// Worker count from RAMOND_THREADS, default 1.
inline unsigned thread_count()
{
    const char* env = std::getenv("RAMOND_THREADS");
    if (!env)
        return 1;
    try {
        int n = std::stoi(env);
        return n < 1 ? 1u : static_cast<unsigned>(n);
    } catch (const std::exception&) {
        return 1;
    }
}

/// Runs f(i) for i in [0, n) on thread_count() workers, striding by worker.
/// The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f)
{
    unsigned workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    if (workers > n)
        workers = static_cast<unsigned>(n);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers)
                    f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace ramond
