#pragma once

#include <cstddef>
#include <functional>

namespace cantor {

/// Worker count: CANTOR_THREADS if set and positive, otherwise the hardware
/// concurrency (CANTOR_THREADS=0 means auto).
std::size_t thread_count();

/// Calls body(i) for every i in [0, count). Indices are split into contiguous
/// blocks, so results written to per-index slots are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace cantor
