#pragma once

#include <algorithm>
#include <atomic>
#include <thread>

namespace swipt::bench {

template <typename T>
std::vector<T> run_ordered(const std::vector<std::function<T()>>& tasks, int threads) {
  std::vector<T> out(tasks.size());
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (n == 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace swipt::bench
