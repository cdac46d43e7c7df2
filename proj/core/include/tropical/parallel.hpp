#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace tropical {

// Worker count for the embarrassingly parallel scans (submatrices, minors).
// 0 means one thread per hardware core. Results never depend on it.
struct Parallelism {
  unsigned threads = 0;

  unsigned resolved() const {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

// Runs body(begin, end) over contiguous chunks covering [0, count).
template <class Body>
void parallel_chunks(std::size_t count, Parallelism par, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(par.resolved(), std::max<std::size_t>(count / 64, 1));
  if (workers <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(count, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

// Smallest index in [0, count) satisfying pred, scanning in parallel. Workers
// abandon their chunk once they pass the best index found so far, so the
// answer is the same for every thread count.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, Parallelism par, Pred&& pred) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  parallel_chunks(count, par, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      if (k >= best.load(std::memory_order_relaxed)) return;
      if (pred(k)) {
        std::size_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
    }
  });
  const std::size_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace tropical
