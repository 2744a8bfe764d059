#ifndef LIQ_DETAIL_PARALLEL_HPP
#define LIQ_DETAIL_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace liq {
namespace detail {

inline int default_jobs() {
  if (const char* env = std::getenv("LIQ_JOBS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Index-based parallel loop. Results must not depend on which thread runs
/// which index; callers derive any per-index randomness from the index, so
/// output is identical for every job count.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, int jobs = 0) {
  if (jobs <= 0) jobs = default_jobs();
  if (jobs == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mtx;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!err) err = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int nthreads = jobs < static_cast<int>(n) ? jobs : static_cast<int>(n);
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace detail
}  // namespace liq

#endif  // LIQ_DETAIL_PARALLEL_HPP
