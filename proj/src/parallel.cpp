#include "cms/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cms {

namespace {
std::atomic<int> g_jobs{1};
thread_local bool t_inside_worker = false;
}  // namespace

void set_jobs(int j) { g_jobs = j < 1 ? 1 : j; }
int jobs() { return g_jobs; }

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(jobs(), n);
  if (workers <= 1 || t_inside_worker) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      t_inside_worker = true;
      for (;;) {
        int i = next++;
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cms
