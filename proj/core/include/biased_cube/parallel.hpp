#pragma once

#include <cstddef>
#include <functional>

namespace bcube {

/// Worker count: BIASED_CUBE_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned workerCount();

/// Calls body(i) for i in [0, count) on up to workerCount() threads. Static
/// block partition; the caller writes results to slot i so output does not
/// depend on scheduling. The first exception thrown is rethrown.
void parallelFor(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bcube
