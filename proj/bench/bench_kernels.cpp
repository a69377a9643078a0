// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 is OpenMP.

#include <benchmark/benchmark.h>

#include "maxsurf/bjorling.hpp"
#include "maxsurf/catalog.hpp"
#include "maxsurf/kernels.hpp"
#include "maxsurf/verify.hpp"
#include "maxsurf/weierstrass.hpp"

using namespace maxsurf;
namespace k = maxsurf::kernels;

namespace {

k::Backend backend(const benchmark::State& s) { return s.range(0) ? k::Backend::OpenMP : k::Backend::Serial; }

void BM_SampleCatalog(benchmark::State& state) {
  const SurfacePatch p = make_patch(CatalogSurface::make(SurfaceId::HelicoidalSpacelikeI, 1.0, 2.0));
  const Grid g{{-1, 1, -1, 1}, 256, 256};
  for (auto _ : state) benchmark::DoNotOptimize(k::sample(p, g, backend(state)));
  state.SetItemsProcessed(state.iterations() * g.size());
}

void BM_SampleBjorling(benchmark::State& state) {
  const CatalogSurface s = CatalogSurface::make(SurfaceId::BendingSpacelike, 2.0);
  const auto src = bjorling_source(s);
  const SurfacePatch p = solve_bjorling(make_bjorling_data(src->curve, src->normal));
  const Grid g{{-1, 1, -1, 1}, 64, 64};
  for (auto _ : state) benchmark::DoNotOptimize(k::sample(p, g, backend(state)));
  state.SetItemsProcessed(state.iterations() * g.size());
}

void BM_MeanCurvature(benchmark::State& state) {
  const SurfacePatch p = make_patch(CatalogSurface::make(SurfaceId::BendingTimelike, 1.0));
  const Grid g{{-1, 1, -1, 1}, 101, 101};
  for (auto _ : state)
    benchmark::DoNotOptimize(mean_curvature_residual(p, g, kDefaultStep, kSingularTolerance, backend(state)));
}

void BM_Sum(benchmark::State& state) {
  const auto fn = [](int i) { return std::sin(1e-3 * i) / (1.0 + 1e-6 * i); };
  for (auto _ : state) benchmark::DoNotOptimize(k::sum_index(1 << 20, fn, backend(state)));
}

void BM_TotalCurvature(benchmark::State& state) {
  const WeierstrassData d = weierstrass_pair(
      dualize(forms_for(CatalogSurface::make(SurfaceId::BendingSpacelike, 1.0), Chart::Punctured)));
  for (auto _ : state) benchmark::DoNotOptimize(total_curvature(d, {1e-3, 1e3}, {}, backend(state)));
}

}  // namespace

BENCHMARK(BM_SampleCatalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleBjorling)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanCurvature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotalCurvature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
