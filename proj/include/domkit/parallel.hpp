#ifndef DOMKIT_PARALLEL_HPP_
#define DOMKIT_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace domkit {

  // Runs fn(i) for i in [0, n) on up to `jobs` threads, handing out indices
  // dynamically.  The first exception thrown by any call is rethrown on the
  // calling thread after all workers stop; remaining indices are skipped.
  template <class Fn>
  void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool>        failed{false};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto work = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed.store(true);
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace domkit

#endif  // DOMKIT_PARALLEL_HPP_
