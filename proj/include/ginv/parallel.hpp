#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ginv {

// Worker count: GINV_THREADS if set and positive, otherwise the hardware
// concurrency (at least 1).
std::size_t thread_count();

// Evaluates fn(0..count-1) on up to thread_count() threads. Results are
// stored by index, so the output is independent of scheduling. The first
// exception thrown by any task is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)> &fn);

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn);

template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)> &fn)
{
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace ginv
