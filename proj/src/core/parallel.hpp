#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace rdmecrit {

// 0 (or negative) resolves to the hardware concurrency.
int resolve_threads(int requested);

// Runs fn(begin, end) over a contiguous partition of [0, n). The partition
// depends only on n and the resolved thread count, and workers never share
// output slots, so callers that write per-index results get identical
// content for every thread count.
template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn &&fn) {
  const int t = resolve_threads(threads);
  if (n <= 0) return;
  if (t <= 1 || n == 1) {
    fn(std::int64_t{0}, n);
    return;
  }
  const int workers = static_cast<int>(std::min<std::int64_t>(t, n));
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t b = w * chunk;
    const std::int64_t e = std::min<std::int64_t>(b + chunk, n);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto &th : pool) th.join();
}

}  // namespace rdmecrit
