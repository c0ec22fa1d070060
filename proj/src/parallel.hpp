#pragma once

// Internal helper: evaluate a pure function over a list of points using all
// hardware threads. Results are written by index, so the output does not
// depend on scheduling.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace critline::detail {

template <class In, class F>
auto parallel_map(const std::vector<In>& xs, F f) -> std::vector<decltype(f(xs[0]))> {
  using Out = decltype(f(xs[0]));
  std::vector<Out> out(xs.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(hw, std::max<std::size_t>(1, xs.size() / 256));
  if (workers <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers) out[i] = f(xs[i]);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace critline::detail
