#pragma once
// Tiny fork-join helper.  Worker count = min(hardware concurrency,
// COXINV_THREADS when set); results are written to caller-indexed slots so
// output order never depends on scheduling.

#include <cstddef>
#include <functional>

namespace coxinv {

// Number of workers to use (>= 1).
std::size_t worker_count();

// Run fn(i) for i in [0, n) across workers; blocks until all complete.
// Exceptions from tasks are rethrown (first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coxinv
