#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adf {

// Runs body(begin, end) over [0, total) in chunks of `chunk`, claimed in
// increasing order by `jobs` threads. Chunk boundaries do not depend on
// `jobs`, so per-chunk results can be merged deterministically. The first
// exception thrown by a worker is rethrown here.
template <class Body>
void for_each_chunk(std::uint64_t total, std::uint64_t chunk, unsigned jobs, Body&& body) {
  if (total == 0) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 256))));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        const std::uint64_t begin = c * chunk;
        body(begin, std::min(total, begin + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_lock);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace adf
