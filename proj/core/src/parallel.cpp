#include "bracelab/common.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace bracelab {

namespace {
std::atomic<int> g_jobs{1};
}

int default_jobs() { return g_jobs.load(); }

void set_default_jobs(int jobs) {
  if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  g_jobs.store(jobs);
}

void parallel_chunks(int n, const std::function<void(int, int)>& fn, int jobs) {
  if (jobs == 0) jobs = default_jobs();
  jobs = std::max(1, std::min(jobs, n));
  if (jobs <= 1 || n <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  int chunk = (n + jobs - 1) / jobs;
  for (int j = 0; j < jobs; ++j) {
    int lo = j * chunk;
    int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back(fn, lo, hi);
  }
  for (auto& w : workers) w.join();
}

bool parallel_all(int n, const std::function<bool(int)>& pred, int jobs) {
  std::atomic<bool> ok{true};
  parallel_chunks(
      n,
      [&](int lo, int hi) {
        for (int i = lo; i < hi && ok.load(std::memory_order_relaxed); ++i) {
          if (!pred(i)) {
            ok.store(false, std::memory_order_relaxed);
            return;
          }
        }
      },
      jobs);
  return ok.load();
}

}  // namespace bracelab
