#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gbclab {

// Runs f(i) for i in [0, count) on `jobs` threads. Each task writes only its own slot, so output order is fixed.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& f)
{
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    {
        std::vector<std::jthread> threads;
        for (int t = 1; t < n; ++t) threads.emplace_back(worker);
        worker();
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace gbclab
