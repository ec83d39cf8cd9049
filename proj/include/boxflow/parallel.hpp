#pragma once

#include <functional>

#include "boxflow/types.hpp"

namespace boxflow {

/// Runs fn(i) for i in [0, n) on up to `threads` worker threads. Callers
/// write results into disjoint preallocated slots, so the outcome is
/// independent of the schedule. threads <= 1 runs inline.
void parallel_for(Index n, int threads, const std::function<void(Index)>& fn);

}  // namespace boxflow
