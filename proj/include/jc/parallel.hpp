#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace jc::detail {

/// Calls body(i) for i in [0, count) on up to hardware_concurrency threads.
/// Each index is visited exactly once; callers write to slot i only.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace jc::detail
