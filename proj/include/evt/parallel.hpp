#pragma once

#include <cstddef>
#include <functional>

namespace evt {

// Runs fn(0..count-1) on a small thread pool. Callers must write to disjoint
// state per index and reduce in index order afterwards, so results are
// identical to a sequential run for any thread count. Thread count comes from
// EVT_THREADS (default: hardware concurrency).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

std::size_t thread_count();

}  // namespace evt
