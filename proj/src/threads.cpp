#include "cylnet/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cylnet {

int thread_budget() {
  const char* env = std::getenv("CYLNET_THREADS");
  if (!env || !*env) return 1;
  int n = std::atoi(env);
  if (n <= 0) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw > 0 && n > int(hw)) n = int(hw);
  return n;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  int workers = thread_budget();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; i++) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto drain = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; w++) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace cylnet
