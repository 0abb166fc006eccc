/**
 * @file parallel.hpp
 * @brief Index-parallel loops capped by the JF_THREADS environment variable.
 *
 * Every index writes its own slot, so results do not depend on the thread count.
 */
#pragma once

#include <cstddef>
#include <functional>

namespace jf {

/// Worker count: JF_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Exceptions are rethrown on the caller's thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace jf
