#pragma once

#include <cstddef>
#include <functional>

namespace wgmsim {

// Runs body(i) for i in [0, n). Work items must be independent; results
// land in caller-owned slots so the output is identical for any thread
// count. Thread count comes from WGMSIM_THREADS or hardware concurrency.
// The first exception thrown by any item is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wgmsim
