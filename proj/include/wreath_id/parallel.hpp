#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace wreath_id {

/// Number of worker threads for chunked enumeration. Reads WREATH_ID_THREADS
/// (0 or unset means hardware concurrency); always at least 1.
std::size_t worker_count();

/// Overrides WREATH_ID_THREADS for the rest of the process. 0 restores the
/// environment-driven default.
void set_worker_count(std::size_t threads);

/// Evaluates `chunk(i)` for i in [0, chunks) on up to worker_count() threads
/// and folds the results with `combine` strictly in index order, so the
/// reduction is deterministic regardless of scheduling. The first exception
/// (by chunk index) is rethrown after all workers finish.
template <typename T, typename ChunkFn, typename CombineFn>
T parallel_reduce(std::size_t chunks, T init, ChunkFn chunk,
                  CombineFn combine) {
  std::vector<std::optional<T>> results(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < chunks; i = next++) {
      try {
        results[i].emplace(chunk(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::min(worker_count(), chunks);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = std::move(init);
  for (auto& r : results) acc = combine(std::move(acc), std::move(*r));
  return acc;
}

}  // namespace wreath_id
