#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace qwalk {

// Worker count: QWALK_THREADS if set to a positive integer (capped at the
// hardware concurrency), otherwise the hardware concurrency.
unsigned worker_count();

// Calls body(begin_chunk, end_chunk) over a partition of [begin, end).
// Chunks are disjoint; body must only write state owned by its chunk.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

// Pairwise (tree) summation with a fixed association order, independent of
// the worker count.
double pairwise_sum(std::span<const double> values);

}  // namespace qwalk
