// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace maxplus {

/// Worker count from MAXPLUS_THREADS, else the number of hardware threads.
/// Throws std::invalid_argument if the variable is set but not an integer >= 1.
std::size_t default_thread_count();

/// Calls fn(i) for i in [0, count) on up to `threads` workers.
/// The first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace maxplus
