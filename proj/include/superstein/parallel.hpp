#pragma once

#include <cstddef>
#include <functional>

namespace superstein {

/// Worker count: hardware concurrency, capped by SUPERSTEIN_THREADS when set.
unsigned thread_count();

/// Runs body(i) for i in [0, n) across thread_count() workers. Each index is
/// visited exactly once; callers write results into per-index slots so output
/// order never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace superstein
