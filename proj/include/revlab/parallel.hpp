#pragma once

#include <cstdint>
#include <functional>

namespace revlab {

// Worker cap shared by all data-parallel kernels.  Initialised from the
// REVLAB_THREADS environment variable (default: hardware concurrency).
int worker_count();
void set_worker_count(int n);

// Runs fn(begin, end) over [0, total) split into chunks of fixed size.
// Chunk boundaries are independent of the worker count, so any kernel that
// writes only to slots derived from the index (or reduces per chunk and
// combines in chunk order) is bit-reproducible across thread counts.
void parallel_chunks(std::int64_t total, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace revlab
