#pragma once

// Index-addressed parallel loop. Work items are claimed from a shared counter,
// but every result is written to the slot of its own index, so the outcome
// never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace recwalk {

/// Worker count from RECWALK_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("RECWALK_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1)
      return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Fn>
void parallel_for_index(std::uint64_t count, Fn&& fn, unsigned workers = worker_count()) {
  if (count == 0)
    return;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), count));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    try {
      for (std::uint64_t i = next++; i < count; i = next++)
        fn(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure)
        failure = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(body);
  body();
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace recwalk
