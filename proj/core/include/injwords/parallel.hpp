#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace injwords {

// Runs fn(0..count-1) across up to jobs threads, work-stealing by atomic
// index. Results must be written to preallocated per-index slots so the
// outcome is independent of scheduling. The first exception is rethrown.
inline void parallel_for_index(std::size_t count, int jobs,
                               const std::function<void(std::size_t)>& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> threads;
  const std::size_t thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  threads.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace injwords
