#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace megan::par {

// Global worker cap, settable from the CLI (--workers). 0 = hardware default.
inline int& worker_override() {
  static int w = 0;
  return w;
}

inline void set_max_workers(int w) { worker_override() = w; }

inline int max_workers() {
  if (worker_override() > 0) return worker_override();
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Data-parallel loop over [0, n). fn(i) must only write to per-i state; the
// serial path (workers == 1) is the reference the tests compare against.
template <class F>
void parallel_for(int n, F&& fn, int workers = 0) {
  if (workers <= 0) workers = max_workers();
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < n; ++i) fn(i);
#else
  for (int i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace megan::par
