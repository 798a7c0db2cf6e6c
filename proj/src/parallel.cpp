#include "gpe/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace gpe {

int worker_count() {
  const char* env = std::getenv("GPE_WORKERS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw && n > static_cast<int>(hw)) n = static_cast<int>(hw);
  return n;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || n < 2 * workers) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace gpe
