#pragma once

#include <cstddef>
#include <functional>

namespace wrlab {

/// Worker count for parallel maps: WRLAB_THREADS if set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
int worker_count();

/// Calls body(i) for i in [0, n). Iterations must write disjoint outputs; the
/// result is then independent of scheduling. threads <= 0 means worker_count().
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int threads = 0);

}  // namespace wrlab
