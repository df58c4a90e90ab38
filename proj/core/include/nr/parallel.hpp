#ifndef NR_PARALLEL_HPP
#define NR_PARALLEL_HPP

#include <functional>

namespace nr {

// Worker cap: NR_THREADS environment variable if set (>=1), otherwise the
// hardware concurrency.
int max_threads();

// Runs fn(0..n-1) on a static block partition. Results must be written to
// caller-owned slots indexed by i, which keeps every sweep deterministic
// regardless of the thread count. The first exception thrown by a worker is
// rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace nr

#endif
