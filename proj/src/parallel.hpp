#ifndef SPECRANGE_PARALLEL_HPP
#define SPECRANGE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace specrange {

// Runs fn(i) for every i in [0, count) on up to `threads` workers
// (0 = hardware concurrency).  Work items must write only to their own
// output slots; results are then independent of scheduling, which is what
// the reproducibility guarantees lean on.  The first exception thrown by a
// work item is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

unsigned resolve_threads(unsigned requested);

}  // namespace specrange

#endif
