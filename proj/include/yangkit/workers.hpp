#pragma once

#include <cstddef>
#include <functional>

namespace yangkit {

// Worker count: YANGKIT_WORKERS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int worker_count();

// Runs fn(i) for i in [0, n) on a bounded pool; the first exception thrown by
// any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int workers = 0);

}  // namespace yangkit
