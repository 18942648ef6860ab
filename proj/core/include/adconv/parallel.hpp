#pragma once

#include <cstdint>
#include <functional>

namespace adconv {

// Static contiguous partition of [begin, end) over at most `threads` workers.
// Each worker gets one chunk and must only write state it owns; under that
// discipline results are independent of the thread count. threads <= 1 runs
// inline on the calling thread.
void parallel_for(std::int64_t begin, std::int64_t end, int threads,
                  const std::function<void(std::int64_t lo, std::int64_t hi)>& body);

}  // namespace adconv
