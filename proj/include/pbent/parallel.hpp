#pragma once

#include <cstddef>
#include <functional>

namespace pbent {

/// Worker count: hardware concurrency, capped by the PBENT_THREADS environment variable.
std::size_t thread_count();

/// Runs fn(i) for i in [0, count). Callers write results into slot i, so the
/// outcome does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pbent
