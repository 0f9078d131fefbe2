#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace blochcomp::par {

// Thread cap from BLOCHCOMP_THREADS (0 or unset = hardware concurrency).
inline int thread_count() {
  if (const char* env = std::getenv("BLOCHCOMP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(begin, end) over a partition of [0, n). Callers own determinism:
// workers write to disjoint index ranges and reductions happen afterwards in
// index order.
inline void parallel_for(long n, const std::function<void(long, long)>& body) {
  if (n <= 0) return;
  const int threads = std::min<long>(thread_count(), n);
  if (threads <= 1 || n < 1024) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace blochcomp::par
