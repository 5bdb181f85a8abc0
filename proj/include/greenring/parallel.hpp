#pragma once

#include <cstddef>
#include <functional>

namespace greenring {

// Worker count: explicit override if set, else GREENRING_THREADS, else
// hardware concurrency. 0 means auto.
std::size_t thread_count();
void set_thread_count(std::size_t threads);

// Runs body(i) for i in [0, count). Exceptions from workers are rethrown on
// the calling thread (the one with the lowest index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace greenring
