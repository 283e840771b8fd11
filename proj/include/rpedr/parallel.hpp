#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rpedr {

// workers <= 0 means "use all logical cores".
inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, count) on a small thread pool. Tasks must be
// independent and write only to per-index slots; under that contract the
// result is identical for any worker count. The first exception thrown by a
// task is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (std::size_t t = 0; t + 1 < nthreads; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace rpedr
