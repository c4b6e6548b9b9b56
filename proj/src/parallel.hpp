#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

// Bounded internal parallelism. RIG_THREADS limits the worker count; 0 or
// unset means hardware concurrency. Callers must write to disjoint slots so
// results stay deterministic regardless of the thread count.
namespace rig::detail {

inline int thread_budget() {
  int budget = 0;
  if (const char* env = std::getenv("RIG_THREADS")) budget = std::atoi(env);
  if (budget <= 0) budget = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(budget, 1);
}

// Runs body(i) for i in [begin, end). If any call throws, the exception from
// the lowest index is rethrown after all workers finish, matching what the
// sequential path would have surfaced.
inline void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  int count = end - begin;
  if (count <= 0) return;
  int workers = std::min(thread_budget(), count);
  if (workers <= 1 || count < 4) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::mutex err_lock;
  std::exception_ptr error;
  int error_index = std::numeric_limits<int>::max();
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = begin + w; i < end; i += workers) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> guard(err_lock);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace rig::detail
