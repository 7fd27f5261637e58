#pragma once

#include <cstddef>
#include <functional>

namespace tclp {

// Worker count: TCLP_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t default_thread_count();

// Calls body(begin, end) over contiguous chunks of [0, count) on up to
// `threads` workers (0 = default_thread_count()). Blocks until done;
// rethrows the first exception raised by a worker.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

} // namespace tclp
