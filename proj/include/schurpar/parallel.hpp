#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schurpar {

inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [begin, end) into chunks of `chunk` indices and evaluates
// fn(lo, hi) for each on up to `threads` workers. Results come back in chunk
// order regardless of scheduling. The first exception thrown by any chunk is
// rethrown on the calling thread.
template <typename Fn>
auto map_chunks(std::int64_t begin, std::int64_t end, std::int64_t chunk, unsigned threads, Fn&& fn)
    -> std::vector<decltype(fn(begin, end))> {
  using Result = decltype(fn(begin, end));
  if (chunk < 1) chunk = 1;
  const std::int64_t count = end > begin ? (end - begin + chunk - 1) / chunk : 0;
  std::vector<Result> results(static_cast<std::size_t>(count));
  if (count == 0) return results;

  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::int64_t idx = next.fetch_add(1);
      if (idx >= count) return;
      const std::int64_t lo = begin + idx * chunk;
      const std::int64_t hi = std::min(end, lo + chunk);
      try {
        results[static_cast<std::size_t>(idx)] = fn(lo, hi);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };

  const unsigned n = std::min<std::int64_t>(resolve_threads(threads), count);
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace schurpar
