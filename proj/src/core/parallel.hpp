#pragma once

#include <cstdint>
#include <functional>

namespace sarchroma {

// Worker count used by parallel_for. n <= 0 resets to the default, which is
// the SARCHROMA_THREADS environment variable if set, else the hardware count.
void set_max_threads(int n);
int max_threads();

// Runs body(begin, end) over a static partition of [0, count) into at most
// max_threads() contiguous blocks. The partition depends only on count and the
// thread count, and blocks never overlap, so results are reproducible whenever
// the body writes only inside its block. Exceptions from workers are rethrown.
void parallel_for(std::int64_t count,
                  const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace sarchroma
