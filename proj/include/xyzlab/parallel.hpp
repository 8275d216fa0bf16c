#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace xyzlab {

/// 0 -> XYZ_LAB_THREADS env var if set, else hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(chunk_begin, chunk_end) over [0, n) on `threads` workers.
/// Chunks are claimed dynamically; callers must make results
/// order-independent (e.g. sort afterwards).
void parallel_chunks(std::uint64_t n, std::uint64_t chunk, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn);

/// Runs produce(i) on workers and commit(i, ...) strictly in index order,
/// so reductions are bit-identical for any worker count.
template <class State, class Produce, class Commit>
void parallel_ordered(std::uint64_t n_tasks, int threads, Produce produce, Commit commit) {
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < n_tasks; ++i) {
      State s = produce(i);
      commit(i, s);
    }
    return;
  }
  std::mutex m;
  std::condition_variable cv;
  std::atomic<std::uint64_t> next{0};
  std::uint64_t commit_at = 0;
  std::exception_ptr err;

  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= n_tasks) return;
      State s;
      try {
        s = produce(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m);
        if (!err) err = std::current_exception();
        commit_at = n_tasks;  // unblock everyone
        cv.notify_all();
        return;
      }
      std::unique_lock<std::mutex> lk(m);
      cv.wait(lk, [&] { return commit_at >= i || err; });
      if (err) return;
      commit(i, s);
      ++commit_at;
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace xyzlab
