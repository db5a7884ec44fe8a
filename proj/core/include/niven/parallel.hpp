#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace niven {

// Runs fn(state, i) for i in [0, n) across `threads` workers.  Each worker
// owns one state built by make_state and handles a strided slice, so
// per-index results land in caller-owned slots and output order never
// depends on scheduling.  The first exception wins and is rethrown.
template <typename StateFactory, typename Fn>
void parallel_strided(std::uint64_t n, unsigned threads, StateFactory make_state,
                      Fn fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    auto state = make_state();
    for (std::uint64_t i = 0; i < n; ++i) fn(state, i);
    return;
  }
  const unsigned worker_count =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  std::once_flag failed_once;
  std::exception_ptr failure;
  for (unsigned w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w] {
      try {
        auto state = make_state();
        for (std::uint64_t i = w; i < n; i += worker_count) fn(state, i);
      } catch (...) {
        std::call_once(failed_once, [&] { failure = std::current_exception(); });
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename Fn>
void parallel_for(std::uint64_t n, unsigned threads, Fn fn) {
  parallel_strided(
      n, threads, [] { return 0; }, [&](int&, std::uint64_t i) { fn(i); });
}

}  // namespace niven
