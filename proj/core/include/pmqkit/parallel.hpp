#pragma once

#include <cstddef>
#include <functional>

namespace pmqkit {

/// Worker count from the PMQKIT_THREADS environment variable; 1 when unset
/// or unparsable. Results never depend on it, only wall time does.
int worker_count();

/// Runs fn(0..n-1) on the configured workers. Output written by index stays
/// deterministic. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace pmqkit
