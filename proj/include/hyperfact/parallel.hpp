#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hyperfact {

// Default worker count for the CLI: HYPERFACT_WORKERS when set, else 1.
inline unsigned env_default_workers() {
  if (const char* env = std::getenv("HYPERFACT_WORKERS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

// Applies fn to every item, writing results by index: output order is the
// input order regardless of scheduling.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned workers, F fn)
    -> std::vector<decltype(fn(items[0]))> {
  using R = decltype(fn(items[0]));
  std::vector<R> results(items.size());
  if (workers <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  const unsigned thread_count =
      static_cast<unsigned>(std::min<std::size_t>(workers, items.size()));
  std::vector<std::thread> threads;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < thread_count; ++w) {
    threads.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        results[i] = fn(items[i]);
      }
    });
  }
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace hyperfact
