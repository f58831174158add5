#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lacuna::detail {

// Splits [0, units) into `workers` contiguous ranges and runs
// fn(worker, begin, end) on each, one thread per range. The first exception
// thrown by any worker is rethrown after all have joined.
template <typename Fn>
void run_partitioned(unsigned workers, std::size_t units, Fn&& fn) {
  workers = static_cast<unsigned>(
      std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(units, 1)));
  if (workers == 1) {
    fn(0U, std::size_t{0}, units);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = units * w / workers;
    const std::size_t end = units * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace lacuna::detail
