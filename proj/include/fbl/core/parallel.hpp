#pragma once

#include <cstddef>
#include <functional>

namespace fbl {

// worker count: FBL_THREADS if set, else hardware concurrency
int worker_count();

// runs body(i) for i in [0, n); each index is handled exactly once and
// results must be written to per-index slots so output order never depends
// on scheduling
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fbl
