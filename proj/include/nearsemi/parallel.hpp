#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nearsemi {

  //! Calls fn(i) for every i in [0, count) on up to `threads` workers.
  //! Indices are claimed dynamically; callers write results into per-index
  //! slots so output order never depends on scheduling. The first exception
  //! thrown by any call is rethrown after all workers join.
  template <typename Fn>
  void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
      for (std::size_t i = 0; i < count; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          next = count;
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  //! Default worker count: hardware concurrency, at least 1.
  inline std::size_t default_threads() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
  }

}  // namespace nearsemi
