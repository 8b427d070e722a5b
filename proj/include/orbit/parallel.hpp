// Copyright (c) 2026 the orbitdensity authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <functional>

namespace orbit {

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(begin, end) on each. Workers must write only to caller-owned slots
// addressed by position, which keeps results identical for every thread
// count. Exceptions propagate from the lowest failing chunk.
void run_chunked(std::int64_t count, int threads,
                 const std::function<void(std::int64_t, std::int64_t)>& fn);

// Thread count from an explicit request or the ORBITDENSITY_THREADS
// environment variable; 1 when neither is set. Rejects values outside
// [1, 256].
int resolve_thread_count(int requested);

}  // namespace orbit
