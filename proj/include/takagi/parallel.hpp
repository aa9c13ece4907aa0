#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace takagi {

inline unsigned default_workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(i) for i in [0, n). Work is handed out in fixed-size blocks via an
// atomic cursor; fn must write its result to a caller-owned slot indexed by i
// so that the combined result is identical for every worker count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t block = 16;
  std::atomic<std::size_t> cursor{0};
  auto run = [&]() {
    for (;;) {
      std::size_t begin = cursor.fetch_add(block);
      if (begin >= n) return;
      std::size_t end = begin + block < n ? begin + block : n;
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace takagi
