#include "maxsurf/kernels.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace maxsurf::kernels {

int configure_threads_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("MAXSURF_THREADS")) {
    int cap = 0;
    const auto res = std::from_chars(env, env + std::strlen(env), cap);
    if (res.ec == std::errc{} && cap > 0) omp_set_num_threads(std::min(cap, omp_get_num_procs()));
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Vec3R> sample(const SurfacePatch& p, const Grid& g, Backend b) {
  g.validate();
  return map_index<Vec3R>(
      g.size(), [&](int k) { return p(g.u(k % g.nu), g.v(k / g.nu)); }, b);
}

}  // namespace maxsurf::kernels
