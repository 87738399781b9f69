#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace codework::detail {

// Calls body(i) for i in [0, count) on up to `jobs` threads, striding so that
// each index is handled exactly once. Results must be written by index.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  std::vector<std::future<void>> pending;
  pending.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pending.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < count; i += workers) body(i);
    }));
  }
  for (auto& p : pending) p.get();
}

}  // namespace codework::detail
