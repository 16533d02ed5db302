#pragma once

#include <cstddef>
#include <functional>

namespace plasmah {

/// Worker cap: PLASMAH_THREADS environment variable when set (>= 1),
/// otherwise the hardware concurrency.
int worker_count();

/// Runs fn(0) .. fn(count-1) across worker threads with a static partition.
/// Callers write into pre-sized slots indexed by i, so output ordering is
/// independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace plasmah
