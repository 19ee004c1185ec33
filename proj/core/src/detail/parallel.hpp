#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace anchorrec::detail {

// Runs f(i) for i in [0, count) on a small thread pool. Callers write results
// into per-index slots, so output never depends on scheduling. The exception
// of the lowest failing index is rethrown.
template <class F>
void parallel_for(std::uint64_t count, F&& f) {
  const auto hw = std::max(1U, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, count));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
          try {
            f(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace anchorrec::detail
