#pragma once

#include <cstddef>
#include <functional>

namespace arcwave {

/// Worker count: ARCWAVE_THREADS if set and positive, else the hardware
/// concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n), striped over thread_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace arcwave
