#pragma once

// Index-parallel loop for enumerations. The worker count is the hardware
// concurrency, capped by the FTK_THREADS environment variable when set.

#include <cstddef>
#include <functional>

namespace ftk {

unsigned worker_count();

/// Calls fn(i) for every i in [0, n). fn must be safe to run concurrently for
/// distinct i; the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ftk
