#pragma once

#include <cstddef>
#include <functional>

namespace lmod {

// LMOD_JOBS overrides the default (hardware concurrency).
int default_jobs();

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by a body is rethrown after all workers finish.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& body);

}  // namespace lmod
