#ifndef VLHAWKES_PARALLEL_HPP
#define VLHAWKES_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace vlhawkes {

/// Number of workers to use for a request of `requested` (0 = all cores).
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(k) for every k in [0, count) on up to `workers` threads. Indices
/// are handed out in chunks; callers write results by index, so the outcome
/// does not depend on scheduling. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) {
      fn(k);
    }
    return;
  }

  constexpr std::size_t chunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto body = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= count) {
          return;
        }
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t k = begin; k < end; ++k) {
          fn(k);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
      next.store(count);
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(body);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace vlhawkes

#endif  // VLHAWKES_PARALLEL_HPP
