#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sz {

/// Runs fn(begin, end, chunk) over `jobs` contiguous chunks of [0, n).
/// Chunk boundaries depend only on (n, jobs), so callers that merge per-chunk
/// results in chunk order get schedule-independent output.
template <typename F>
void parallel_chunks(std::size_t n, unsigned jobs, F&& fn) {
  jobs = std::max(1U, jobs);
  if (jobs == 1 || n < 2) {
    fn(std::size_t{0}, n, 0U);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  const std::size_t step = (n + jobs - 1) / jobs;
  for (unsigned c = 0; c < jobs; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    threads.emplace_back([&, begin, end, c] {
      try {
        fn(begin, end, c);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace sz
