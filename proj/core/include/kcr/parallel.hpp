#pragma once

#include <cstddef>
#include <functional>

namespace kcr {

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
///
/// Work is pulled from a shared atomic counter, so completion order is
/// arbitrary; callers that need deterministic output must write results
/// into slots addressed by i. The first exception thrown by any fn is
/// rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace kcr
