#pragma once

#include <cstddef>
#include <functional>

namespace sympow {

/// Worker count used by batch operations (membership fan-out and similar).
/// Defaults to 1; 0 means hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Calls body(i) for i in [0, n), spread over thread_count() workers.
/// The first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sympow
