#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace binsum::detail {

// Runs fn(i) for every i in [0, count) on up to `jobs` threads. Indices are
// handed out through a shared counter; callers keep per-index result slots,
// so merged output does not depend on scheduling. The first exception wins
// and is rethrown on the calling thread.
template <class Fn>
void for_each_index(long count, int jobs, Fn&& fn) {
  if (count <= 0) return;
  const int workers = static_cast<int>(std::min<long>(jobs < 1 ? 1 : jobs, count));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        if (failed.load(std::memory_order_relaxed)) return;
        const long i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace binsum::detail
