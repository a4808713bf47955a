#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace tricube {

/// Runs fn(i) for i in [0, n), possibly on several threads.
/// Work is split into static contiguous chunks and every slot is written by
/// exactly one invocation, so results are bit-identical to the serial loop.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t grain = 512) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || n <= grain) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(hw, (n + grain - 1) / grain);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace tricube
