#include "tclp/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tclp {

std::size_t default_thread_count() {
    if (const char* env = std::getenv("TCLP_THREADS"); env != nullptr) {
        std::size_t value = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc{} && ptr == end && value > 0) {
            return value;
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) {
        return;
    }
    if (threads == 0) {
        threads = default_thread_count();
    }
    threads = std::min(threads, count);
    if (threads <= 1) {
        body(0, count);
        return;
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        workers.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    workers.clear(); // joins
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace tclp
