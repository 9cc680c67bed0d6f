#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace dwindex {

// Worker count from DWINDEX_THREADS (default: hardware concurrency, at least 1).
unsigned thread_count();

// Runs task(i) for i in [0, count) across thread_count() workers. Tasks must
// write only to disjoint, index-addressed outputs. The first exception thrown
// by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

// Seed for substream `stream` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace dwindex
