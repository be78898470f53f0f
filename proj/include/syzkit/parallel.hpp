#ifndef SYZKIT_PARALLEL_HPP
#define SYZKIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace syzkit {

// Worker count: min(hardware, SYZKIT_THREADS when set), at least 1.
int thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget.  Work items must be
// independent; callers keep results in index order, so the output does not
// depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace syzkit

#endif
