#pragma once

#include <cstddef>
#include <functional>

namespace cylnet {

// Worker cap from CYLNET_THREADS (0 or 1 = serial, unset = serial).
int thread_budget();

// Run fn(i) for i in [0, n); tasks must be independent.  Results land
// wherever fn writes them, so order is deterministic regardless of the
// thread count.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace cylnet
