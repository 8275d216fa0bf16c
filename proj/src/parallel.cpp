#include "xyzlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace xyzlab {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("XYZ_LAB_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

void parallel_chunks(std::uint64_t n, std::uint64_t chunk, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n <= chunk) {
    fn(0, n);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex em;
  auto worker = [&] {
    for (;;) {
      std::uint64_t lo = next.fetch_add(chunk);
      if (lo >= n) return;
      std::uint64_t hi = std::min(n, lo + chunk);
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lk(em);
        if (!err) err = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace xyzlab
