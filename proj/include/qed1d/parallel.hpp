#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace qed1d {

/// Worker count: QED1D_MAX_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned max_threads();

/// Runs body(i) for i in [0, n) on up to max_threads() threads. Work is handed
/// out by an atomic counter; the first exception thrown (lowest index) is
/// rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Ordered map: out[i] = fn(i), independent of scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace qed1d
