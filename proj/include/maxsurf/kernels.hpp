#pragma once

// Data-parallel grid kernels. Each kernel has an OpenMP implementation and a
// plain serial reference; tests check that the two agree and the benchmark
// target compares their speed.
//
// Reductions are deterministic: the OpenMP sum adds fixed-size chunks in
// index order, so results do not depend on the thread count.

#include <algorithm>
#include <cmath>
#include <exception>
#include <vector>

#include "maxsurf/patch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace maxsurf::kernels {

enum class Backend { Serial, OpenMP };

/// Applies MAXSURF_THREADS (when set to a positive integer) as the thread cap
/// and returns the cap in effect.
int configure_threads_from_env();

/// Threads an OpenMP region would use right now (1 without OpenMP).
int max_threads();

inline constexpr int kSumChunk = 256;

namespace serial {

template <class T, class F>
std::vector<T> map_index(int n, F&& fn) {
  std::vector<T> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

template <class F>
double sum_index(int n, F&& fn) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += fn(i);
  return acc;
}

template <class F>
double max_index(int n, F&& fn) {
  double m = 0.0;
  for (int i = 0; i < n; ++i) m = std::max(m, fn(i));
  return m;
}

}  // namespace serial

namespace omp {

// Exceptions cannot cross an OpenMP region; the first one is kept and
// rethrown after the loop.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(maxsurf_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

template <class T, class F>
std::vector<T> map_index(int n, F&& fn) {
  std::vector<T> out(static_cast<std::size_t>(n));
  ErrorSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < n; ++i) slot.run([&] { out[i] = fn(i); });
  slot.rethrow();
  return out;
}

template <class F>
double sum_index(int n, F&& fn) {
  const int chunks = (n + kSumChunk - 1) / kSumChunk;
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
  ErrorSlot slot;
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    slot.run([&] {
      const int end = std::min(n, (c + 1) * kSumChunk);
      double acc = 0.0;
      for (int i = c * kSumChunk; i < end; ++i) acc += fn(i);
      partial[c] = acc;
    });
  }
  slot.rethrow();
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

template <class F>
double max_index(int n, F&& fn) {
  const std::vector<double> values = map_index<double>(n, fn);
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

}  // namespace omp

template <class T, class F>
std::vector<T> map_index(int n, F&& fn, Backend b = Backend::OpenMP) {
  return b == Backend::OpenMP ? omp::map_index<T>(n, fn) : serial::map_index<T>(n, fn);
}

template <class F>
double sum_index(int n, F&& fn, Backend b = Backend::OpenMP) {
  return b == Backend::OpenMP ? omp::sum_index(n, fn) : serial::sum_index(n, fn);
}

template <class F>
double max_index(int n, F&& fn, Backend b = Backend::OpenMP) {
  return b == Backend::OpenMP ? omp::max_index(n, fn) : serial::max_index(n, fn);
}

/// X at every grid node, index j * nu + i.
std::vector<Vec3R> sample(const SurfacePatch& p, const Grid& g, Backend b = Backend::OpenMP);

}  // namespace maxsurf::kernels
