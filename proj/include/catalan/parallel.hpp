#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace catalan {

/// Runs fn(0..count-1) on up to `workers` threads. Results must be written to
/// per-index slots by fn; the first exception (lowest index) is rethrown.
template <typename Fn>
void parallelFor(std::size_t count, unsigned workers, Fn &&fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    for (unsigned w = 0; w < n; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace catalan
