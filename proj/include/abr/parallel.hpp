#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace abr {

/// Worker count: ABR_THREADS if set and positive, otherwise the hardware
/// concurrency. ABR_THREADS=0 means auto.
inline unsigned worker_count() {
  if (const char* env = std::getenv("ABR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

/// Splits [0, count) into contiguous chunks whose boundaries are multiples
/// of `align`, and runs body(chunk_index, begin, end) on each. Chunks are
/// numbered in range order so callers can merge results deterministically.
/// Returns the number of chunks. The first exception thrown by a body is
/// rethrown after all workers join.
template <typename Body>
std::size_t parallel_chunks(std::uint64_t count, std::uint64_t align, Body&& body) {
  const std::uint64_t min_chunk = std::max<std::uint64_t>(align, 256);
  std::uint64_t workers = std::min<std::uint64_t>(worker_count(), count / min_chunk + 1);
  if (workers <= 1) {
    body(std::size_t{0}, std::uint64_t{0}, count);
    return 1;
  }
  std::uint64_t chunk = (count + workers - 1) / workers;
  chunk = (chunk + align - 1) / align * align;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t used = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    if (begin >= count) break;
    const std::uint64_t end = std::min(count, begin + chunk);
    ++used;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(static_cast<std::size_t>(w), begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return used;
}

}  // namespace abr
