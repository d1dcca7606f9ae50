#pragma once

#include <cstddef>
#include <functional>

namespace hardyline {

/// Number of worker threads: HARDYLINE_THREADS if set (minimum 1), otherwise
/// the hardware concurrency.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n) across workers in fixed index blocks. Callers
/// write results into preallocated per-index slots, so the outcome is
/// identical to the sequential loop regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hardyline
