#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace setalg {

/// Upper bound on worker threads used by partitioned searches; 0 resets to 1.
void set_max_threads(unsigned n) noexcept;
unsigned max_threads() noexcept;

/// Least i in [0, n) with pred(i). Contiguous chunks are scanned by up to
/// max_threads() workers, so the answer does not depend on the thread count.
/// pred must be safe to call concurrently.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t n, Pred pred) {
  constexpr std::size_t kMinChunk = 2048;
  const std::size_t workers = std::min<std::size_t>(max_threads(), (n + kMinChunk - 1) / kMinChunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{n};
  std::exception_ptr error;
  std::mutex error_lock;
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
      try {
        for (std::size_t i = lo; i < hi && i < best.load(std::memory_order_relaxed); ++i)
          if (pred(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            return;
          }
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == n) return std::nullopt;
  return best.load();
}

}  // namespace setalg
