#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kleinzeta::detail {

// Runs fn(task) for task in [0, ntasks) on up to `threads` workers.  Results
// land in task order so the caller's reduction does not depend on scheduling.
template <typename R, typename Fn>
std::vector<R> run_tasks(std::size_t ntasks, unsigned threads, Fn fn) {
  std::vector<R> out(ntasks);
  if (threads <= 1 || ntasks <= 1) {
    for (std::size_t t = 0; t < ntasks; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= ntasks) return;
      try {
        out[t] = fn(t);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        next = ntasks;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = threads < ntasks ? threads : static_cast<unsigned>(ntasks);
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace kleinzeta::detail
