#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace faultstab {

// Index-sharded loop: each index is processed exactly once and results must
// be written to per-index slots, so output is identical for any thread count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int nt = std::min<std::size_t>(threads, n);
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace faultstab
