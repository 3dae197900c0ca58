#pragma once

#include <functional>

namespace etalab {

/// Worker cap: ETA_LAB_THREADS when set (clamped to [1, 256]), otherwise
/// hardware concurrency.
int thread_cap();

/// Runs fn(0..n-1) across up to thread_cap() workers. Each index must write
/// only its own slot; results are then deterministic regardless of schedule.
/// The first exception thrown by any worker is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace etalab
