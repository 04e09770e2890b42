#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gncg {

/// Default worker count: GNCG_JOBS when set, else 1.
inline int default_jobs() {
  if (const char* env = std::getenv("GNCG_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

/// Apply fn to every index in [0, count) across `jobs` threads. Results must
/// be written into pre-sized per-index slots by the caller, which keeps the
/// merged output independent of the worker count.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  int n = std::min<int>(jobs, static_cast<int>(count));
  threads.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
}

}  // namespace gncg
