// Minimal index-parallel loop with per-index exception capture.

#ifndef ECCAD_SRC_PARALLEL_HPP
#define ECCAD_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace eccad::detail {

/// Runs fn(i) for i in [0, n).  Returns the exception of the smallest
/// failing index (or nullptr); every index still runs.
template <class Fn>
std::exception_ptr parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  auto body = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) return e;
  return nullptr;
}

}  // namespace eccad::detail

#endif  // ECCAD_SRC_PARALLEL_HPP
