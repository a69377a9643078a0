#include <gtest/gtest.h>

#include <cmath>

#include "maxsurf/bjorling.hpp"
#include "maxsurf/error.hpp"
#include "support.hpp"

using namespace maxsurf;
using testing_support::dist;

namespace {

BjorlingData bending_timelike(double a, double u0 = 0.0) {
  return make_bjorling_data(CurveFamily::circle(CurveKind::CircleTimelike), NormalFieldSpec::linear(a), u0);
}

QuadratureSpec adaptive() {
  QuadratureSpec q;
  q.rule = QuadratureSpec::Rule::AdaptiveSimpson;
  q.tol = 1e-13;
  return q;
}

}  // namespace

TEST(Bjorling, InitialCurveIsReproduced) {
  for (const CurveFamily& fam : {CurveFamily::circle(CurveKind::CircleSpacelike),
                                 CurveFamily::helix(CurveKind::HelixSpacelikeII, 0.7)}) {
    const BjorlingData data = make_bjorling_data(fam, NormalFieldSpec::linear(1.3));
    const SurfacePatch p = solve_bjorling(data);
    for (double u : {-1.0, 0.0, 0.8}) {
      EXPECT_LT(dist(p(u, 0.0), real_part(data.alpha.position(u))), 1e-13);
    }
  }
}

TEST(Bjorling, GaussLegendreAndAdaptiveAgree) {
  const BjorlingData data = bending_timelike(1.0);
  const SurfacePatch gl = solve_bjorling(data);
  const SurfacePatch ad = solve_bjorling(data, adaptive());
  testing_support::Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    const double u = rng.uniform(-1.5, 1.5), v = rng.uniform(-1.5, 1.5);
    EXPECT_LT(dist(gl(u, v), ad(u, v)), 1e-10) << u << "," << v;
  }
}

TEST(Bjorling, BasePointOnlyShiftsTheParametrizationOfTheIntegral) {
  // the integrand is entire, so starting at a different real u0 changes
  // the integral by a real vector whose real part of i * (...) vanishes
  const SurfacePatch p0 = solve_bjorling(bending_timelike(0.8, 0.0));
  const SurfacePatch p1 = solve_bjorling(bending_timelike(0.8, 0.9));
  for (double u : {-0.7, 0.3}) {
    for (double v : {-0.5, 0.6}) EXPECT_LT(dist(p0(u, v), p1(u, v)), 1e-12);
  }
}

TEST(Bjorling, FallbackHandlesLargeImaginaryParts) {
  const BjorlingData data = bending_timelike(1.0);
  QuadratureSpec coarse;
  coarse.nodes = 8;
  coarse.fallback_abs_v = 2.0;
  const SurfacePatch with_fallback = solve_bjorling(data, coarse);
  const SurfacePatch reference = solve_bjorling(data, adaptive());
  EXPECT_LT(dist(with_fallback(0.4, 6.0), reference(0.4, 6.0)), 1e-8 * euclid_norm(reference(0.4, 6.0)));
}

TEST(Bjorling, QuadratureSpecValidation) {
  QuadratureSpec q;
  q.nodes = 3;
  EXPECT_THROW(q.validate(), std::invalid_argument);
  QuadratureSpec a = adaptive();
  a.tol = 0.0;
  EXPECT_THROW(a.validate(), std::invalid_argument);
}

TEST(Bjorling, ReferenceNormalIsTheGivenField) {
  const BjorlingData data = make_bjorling_data(CurveFamily::helix(CurveKind::HelixTimelike, 0.6),
                                               NormalFieldSpec::linear(1.0));
  const SurfacePatch p = solve_bjorling(data);
  for (double u : {-0.9, 0.0, 1.2}) {
    EXPECT_LT(dist(reference_normal(data, p, u), real_part(data.normal(u))), 1e-7);
  }
}

TEST(Bjorling, IntegrandIsNormalCrossTangent) {
  const BjorlingData data = bending_timelike(1.5);
  const Complex w(0.3, -0.4);
  const Vec3C expected = lorentz_cross(data.normal(w), data.alpha.tangent(w));
  EXPECT_LT(dist(bjorling_integrand(data, w), expected), 1e-15);
}
