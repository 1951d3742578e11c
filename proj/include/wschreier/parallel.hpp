#ifndef WSCHREIER_PARALLEL_HPP
#define WSCHREIER_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace wschreier {

/// Runs fn(i) for i in [0, count) across the given number of threads.
/// Callers write into pre-sized per-index slots, so merged results are
/// deterministic regardless of schedule.
template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int n = std::min(threads, count);
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace wschreier

#endif
