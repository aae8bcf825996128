#pragma once

// Data-parallel sweep kernels. Every kernel has a serial reference version
// (suffix _serial) with identical per-element arithmetic; the OpenMP
// versions must agree with them bit for bit.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace etype {

template <class T, class Fn>
auto map_serial(std::span<const T> inputs, Fn&& fn)
    -> std::vector<decltype(fn(inputs[0]))> {
  std::vector<decltype(fn(inputs[0]))> out;
  out.reserve(inputs.size());
  for (const T& x : inputs) out.push_back(fn(x));
  return out;
}

// Parallel map. Exceptions thrown by fn are captured and the first one is
// rethrown on the calling thread after the loop.
template <class T, class Fn>
auto map_parallel(std::span<const T> inputs, Fn&& fn)
    -> std::vector<decltype(fn(inputs[0]))> {
  using R = decltype(fn(inputs[0]));
  std::vector<R> out(inputs.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(inputs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(etype_map_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Evaluates a scalar function over an r-grid.
template <class Fn>
std::vector<double> sweep_grid_serial(std::span<const double> grid, Fn&& fn) {
  return map_serial(grid, std::forward<Fn>(fn));
}

template <class Fn>
std::vector<double> sweep_grid(std::span<const double> grid, Fn&& fn) {
  return map_parallel(grid, std::forward<Fn>(fn));
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace etype
