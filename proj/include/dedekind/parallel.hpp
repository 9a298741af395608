#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "dedekind/numeric.hpp"

namespace dedekind {

/// Resolves a --jobs style request: 0 means all available hardware threads.
inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) {
    return jobs;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(b) for b in [lo, hi] on up to `jobs` threads. Results are
/// returned in ascending b regardless of scheduling. The first exception
/// thrown by any worker is rethrown on the calling thread.
template <class Fn>
auto parallel_map(Int lo, Int hi, unsigned jobs, Fn&& fn) {
  using Result = decltype(fn(lo));
  const Int count = hi >= lo ? hi - lo + 1 : 0;
  std::vector<Result> results(static_cast<std::size_t>(count));
  const unsigned workers =
      static_cast<unsigned>(std::min<Int>(resolve_jobs(jobs), std::max<Int>(count, 1)));
  if (workers <= 1) {
    for (Int b = lo; b <= hi; ++b) {
      results[static_cast<std::size_t>(b - lo)] = fn(b);
    }
    return results;
  }
  std::atomic<Int> next{lo};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (Int b = next++; b <= hi; b = next++) {
        try {
          results[static_cast<std::size_t>(b - lo)] = fn(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

}  // namespace dedekind
