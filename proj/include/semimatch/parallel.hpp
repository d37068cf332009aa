#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace semimatch {

/// Runs worker(begin, end) over disjoint chunks of [0, count), one chunk per
/// thread. Falls back to a single inline call for small inputs so callers can
/// use it unconditionally. Workers must only touch disjoint output slots.
template <class Worker>
void parallel_chunks(std::size_t count, Worker&& worker,
                     std::size_t min_per_thread = 2048) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t threads = hw == 0 ? 1 : hw;
  if (threads > 1 && count / threads < min_per_thread) {
    threads = count / min_per_thread;
  }
  if (threads <= 1 || count == 0) {
    worker(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) {
      break;
    }
    pool.emplace_back([&worker, begin, end] { worker(begin, end); });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace semimatch
