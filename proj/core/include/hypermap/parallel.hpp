#pragma once

#include <cstddef>
#include <functional>

namespace hypermap {

/// Worker count: HYPERMAP_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count() noexcept;

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Work is
/// split into contiguous blocks; callers write results by index, so the
/// outcome does not depend on the partitioning.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hypermap
