#pragma once

#include <cstddef>
#include <functional>

namespace boroczky {

/// Global worker count for the parallelizable sweeps (pairwise meets,
/// interpolation rows). 1 = sequential. Results are bit-identical for any
/// value: work is partitioned by index and merged in index order.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for i in [0, n), splitting across the configured workers.
/// fn must only write to index-i slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace boroczky
