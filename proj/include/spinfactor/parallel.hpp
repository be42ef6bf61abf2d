#ifndef SPINFACTOR_PARALLEL_HPP
#define SPINFACTOR_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spinfactor {

// SPINFACTOR_THREADS caps internal parallelism; results are always merged in
// task order, so output bytes do not depend on the thread count.
inline int thread_budget() {
  if (const char* env = std::getenv("SPINFACTOR_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class F>
void parallel_for_ordered(size_t count, F&& fn) {
  int workers = thread_budget();
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  size_t nthreads = std::min<size_t>(static_cast<size_t>(workers), count);
  std::vector<std::exception_ptr> errors(nthreads);
  for (size_t t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= count) break;
          fn(i);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace spinfactor

#endif
