#pragma once

#include <functional>

namespace cms {

/// Worker count used by parallel_for; 1 means run inline.
void set_jobs(int jobs);
int jobs();

/// Calls fn(i) for i in [0, n) on up to jobs() threads. Each index is
/// processed exactly once; the call returns after all finish. The first
/// exception thrown by a worker is rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace cms
