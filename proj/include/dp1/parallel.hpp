#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace dp1 {

// Number of worker threads: hardware concurrency, capped by the
// TOOLKIT_THREADS environment variable when set to a positive integer.
inline std::size_t worker_count() {
  static const std::size_t value = [] {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TOOLKIT_THREADS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(parsed));
    }
    return n;
  }();
  return value;
}

// Runs fn(begin, end) over a partition of [0, n) on worker threads.  Chunks
// are disjoint, so writers to per-index slots need no synchronization; any
// exception is rethrown on the calling thread.  Results must not depend on
// the partition (all uses here are pure per-index computations).
inline void parallel_for(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  if (n == 0) return;
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&, w, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

} // namespace dp1
