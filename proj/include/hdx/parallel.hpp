#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hdx {

/// Effective worker count: 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, one per worker, and runs
/// fn(worker, lo, hi). Results must be merged by the caller in worker order.
template <class Fn>
void run_partitioned(std::uint64_t total, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (total < 2 * threads) threads = 1;
  if (threads == 1) {
    fn(0U, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = total / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = chunk * t;
    const std::uint64_t hi = (t + 1 == threads) ? total : lo + chunk;
    pool.emplace_back([&, t, lo, hi] {
      try {
        fn(t, lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hdx
