#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace spdcfilm {

/// Parallel map over [0, n): each index is computed exactly once and
/// workers write only their own slots, so results are bitwise independent
/// of the thread count. threads <= 0 selects hardware concurrency.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
  unsigned nt = threads > 0 ? static_cast<unsigned>(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, n > 0 ? static_cast<unsigned>(n) : 1u);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(nt);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += nt) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace spdcfilm
