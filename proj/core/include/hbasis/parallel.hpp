#pragma once

#include <cstddef>
#include <functional>

namespace hbasis {

// Process-wide cap on internal worker threads (default 1). Results never
// depend on this value; only wall time does.
void set_max_threads(unsigned n);
unsigned max_threads();

// Splits [0, count) into contiguous chunks and runs body(begin, end) on each,
// using up to max_threads() threads. Chunks are disjoint, so bodies that
// only write inside their own range produce schedule-independent results.
void parallel_chunks(std::size_t count, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hbasis
