#ifndef VECTS1_PARALLEL_HPP
#define VECTS1_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace vects1 {

/// Worker count: hardware concurrency, capped by VECTS1_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over worker_count() threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// output does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace vects1

#endif
