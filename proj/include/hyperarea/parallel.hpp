#pragma once

#include <cstddef>
#include <functional>

namespace hyperarea::parallel {

/// Worker count used by parallel_for. Defaults to $HYPERAREA_THREADS, else 1.
int thread_count();
/// 0 restores the environment default.
void set_thread_count(int threads);

/// Calls fn(i) for i in [0, count). Work items must write to disjoint outputs;
/// results do not depend on the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hyperarea::parallel
