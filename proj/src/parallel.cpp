// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#include "orbit/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "orbit/errors.hpp"

namespace orbit {

void run_chunked(std::int64_t count, int threads,
                 const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  if (threads < 1) {
    throw PreconditionError("thread count must be at least 1");
  }
  const std::int64_t workers = std::min<std::int64_t>(threads, count);
  if (workers == 1) {
    fn(0, count);
    return;
  }
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t begin = count * w / workers;
    const std::int64_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        failures[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

int resolve_thread_count(int requested) {
  int value = requested;
  if (value == 0) {
    if (const char* env = std::getenv("ORBITDENSITY_THREADS")) {
      try {
        value = std::stoi(env);
      } catch (...) {
        throw PreconditionError("ORBITDENSITY_THREADS is not an integer");
      }
    } else {
      value = 1;
    }
  }
  if (value < 1 || value > 256) {
    throw PreconditionError("thread count must be in [1, 256]");
  }
  return value;
}

}  // namespace orbit
