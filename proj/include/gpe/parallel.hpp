#pragma once

#include <functional>

namespace gpe {

// Worker count from the GPE_WORKERS environment variable; defaults to 1.
int worker_count();

// Run fn(i) for i in [0, n) across the configured workers. Callers must
// write results into preallocated per-index slots; the partition is
// deterministic.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace gpe
