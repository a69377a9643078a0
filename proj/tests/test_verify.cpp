#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "maxsurf/bjorling.hpp"
#include "maxsurf/catalog.hpp"
#include "maxsurf/verify.hpp"
#include "maxsurf/weierstrass.hpp"
#include "support.hpp"

using namespace maxsurf;
using std::numbers::pi;

namespace {

SurfacePatch plane() {
  SurfacePatch p;
  p.eval = [](double u, double v) { return Vec3R{u, v, 0.0}; };
  p.family = "plane";
  return p;
}

// the upper sheet of the hyperboloid <x, x> = -1, a spacelike surface with |H| = 1
SurfacePatch hyperboloid() {
  SurfacePatch p;
  p.eval = [](double u, double v) { return Vec3R{u, v, std::sqrt(1.0 + u * u + v * v)}; };
  p.family = "hyperboloid";
  return p;
}

SurfacePatch catalog(SurfaceId id, double a, double l = 0.0) {
  return make_patch(CatalogSurface::make(id, a, l));
}

Grid square(int n = 21, double half = 1.0) { return Grid{{-half, half, -half, half}, n, n}; }

}  // namespace

TEST(FundamentalForms, Plane) {
  const FundamentalForms ff = fundamental_forms(plane(), 0.3, -0.7);
  EXPECT_NEAR(ff.E, 1.0, 1e-12);
  EXPECT_NEAR(ff.F, 0.0, 1e-12);
  EXPECT_NEAR(ff.G, 1.0, 1e-12);
  EXPECT_NEAR(ff.e, 0.0, 1e-9);
  EXPECT_NEAR(ff.f, 0.0, 1e-9);
  EXPECT_NEAR(ff.g, 0.0, 1e-9);
  EXPECT_TRUE(ff.spacelike);
  EXPECT_NEAR(ff.area_ratio, 1.0, 1e-12);
  EXPECT_LT(testing_support::dist(ff.normal, Vec3R{0, 0, -1}), 1e-12);
}

TEST(FundamentalForms, BjorlingOutputIsConformal) {
  const FundamentalForms ff = fundamental_forms(catalog(SurfaceId::BendingTimelike, 1.0), 0.4, 0.2, kTangentStep);
  EXPECT_LT(std::abs(ff.E - ff.G), 1e-6);
  EXPECT_LT(std::abs(ff.F), 1e-6);
}

TEST(FundamentalForms, SpacelikeCircleCoreHasUnitSpeed) {
  for (double u : {-1.0, 0.0, 0.8}) {
    const FundamentalForms ff = fundamental_forms(catalog(SurfaceId::BendingSpacelike, 2.0), u, 0.0);
    EXPECT_NEAR(ff.E, 1.0, 1e-9);
  }
}

TEST(FundamentalForms, AreaRatioMatchesTheGaussMap) {
  // for conformal maximal data the ratio is ((1 - |g|^2) / (1 + |g|^2))^2
  const CatalogSurface s = CatalogSurface::make(SurfaceId::BendingTimelike, 1.0);
  const WeierstrassData w = weierstrass_pair(forms_for(s));
  for (double u : {-0.9, 0.1, 1.3}) {
    for (double v : {-0.7, 0.4}) {
      const double m = std::norm(w.g(Complex(u, v)));
      const double want = std::pow((1.0 - m) / (1.0 + m), 2);
      EXPECT_NEAR(fundamental_forms(make_patch(s), u, v).area_ratio, want, 1e-8);
    }
  }
}

TEST(MeanCurvature, CatenoidsAreMaximal) {
  for (auto [id, a] : {std::pair{SurfaceId::EllipticCatenoid, 1.0}, std::pair{SurfaceId::HyperbolicCatenoid, 0.0}}) {
    const GridMaximum m = mean_curvature_residual(catalog(id, a), square().interior());
    EXPECT_LT(m.max_residual, 1e-5);
    EXPECT_GT(m.evaluated, 0);
  }
}

TEST(MeanCurvature, HyperboloidControlIsNotMaximal) {
  const GridMaximum m = mean_curvature_residual(hyperboloid(), square().interior());
  EXPECT_GT(m.max_residual, 0.1);
  EXPECT_NEAR(std::abs(mean_curvature(fundamental_forms(hyperboloid(), 0.2, 0.5))), 1.0, 1e-6);
  EXPECT_TRUE(m.excluded.empty());
}

TEST(MeanCurvature, InvariantUnderRigidMotions) {
  // a window clear of the singular set in every frame; the exclusion
  // threshold uses Euclidean norms, which boosts do change
  const SurfacePatch p = catalog(SurfaceId::BendingSpacelike, 2.0);
  const Grid g = square(11, 0.5);
  const double base = mean_curvature_residual(p, g).max_residual;
  for (const MotionGroup& grp : {MotionGroup::rot_timelike(), MotionGroup::rot_spacelike(),
                                 MotionGroup::rot_lightlike(), MotionGroup::screw_timelike(0.6)}) {
    const double moved = mean_curvature_residual(transform_patch(p, grp.at(0.7)), g).max_residual;
    EXPECT_LT(std::abs(moved - base), 1e-6) << to_string(grp.kind());
  }
}

TEST(MeanCurvature, NaNIsNotSwallowed) {
  SurfacePatch p = plane();
  p.eval = [](double u, double v) {
    return u > 0.5 ? Vec3R{u, v, std::nan("")} : Vec3R{u, v, 0.0};
  };
  const GridMaximum m = mean_curvature_residual(p, square(5), kDefaultStep, 0.0);
  EXPECT_TRUE(std::isnan(m.max_residual) || !m.excluded.empty());
  EXPECT_FALSE(make_check("x", std::nan(""), 1.0).pass);
}

TEST(Conformality, CatalogFamilies) {
  for (auto id : {SurfaceId::BendingTimelike, SurfaceId::BendingSpacelike, SurfaceId::LightlikeRotational,
                  SurfaceId::HelicoidalTimelike}) {
    const GridMaximum m = conformality_residual(catalog(id, 1.0, 0.6), square().interior());
    EXPECT_LT(m.max_residual, 1e-6) << to_string(id);
  }
}

TEST(SpacelikeRegion, PlaneIsEverywhereSpacelike) {
  for (auto b : spacelike_region(plane(), square())) EXPECT_EQ(b, 1);
}

TEST(SpacelikeRegion, LightlikeRotationalDegeneratesOnlyOnItsSingularLine) {
  // g = z / (z - 2i), so |g| = 1 exactly on v = 1, the top edge of the square
  const Grid grid = square();
  const auto mask = spacelike_region(catalog(SurfaceId::LightlikeRotational, 0.0), grid);
  for (int k = 0; k < grid.size(); ++k) {
    const bool top = k / grid.nu == grid.nv - 1;
    EXPECT_EQ(mask[k] == 1, !top) << k;
  }
}

TEST(SpacelikeRegion, AgreesWithTheGaussMapOracle) {
  const CatalogSurface s = CatalogSurface::make(SurfaceId::BendingTimelike, 1.0);
  const WeierstrassData w = weierstrass_pair(forms_for(s));
  const Grid grid{{-pi, pi, -2.0, 2.0}, 61, 41};
  const double tol = 1e-2;
  const auto mask = spacelike_region(make_patch(s), grid, tol);
  int falses = 0, compared = 0;
  for (int k = 0; k < grid.size(); ++k) {
    const double m = std::norm(w.g(Complex(grid.u(k % grid.nu), grid.v(k / grid.nu))));
    const double rho = std::pow((1.0 - m) / (1.0 + m), 2);
    falses += mask[k] == 0;
    // compare only nodes clearly on one side of the threshold
    if (std::abs(rho - tol) < 1e-3) continue;
    ++compared;
    EXPECT_EQ(mask[k] == 1, rho > tol) << grid.u(k % grid.nu) << "," << grid.v(k / grid.nu);
  }
  EXPECT_GT(falses, 0);
  EXPECT_GT(compared, grid.size() * 9 / 10);
}

TEST(Recovery, BjorlingDataIsRecovered) {
  const std::vector<double> us{-1.0, -0.5, 0.0, 0.5, 1.0};
  for (auto [id, a, l] : {std::tuple{SurfaceId::BendingTimelike, 1.0, 0.0},
                          std::tuple{SurfaceId::HelicoidalTimelike, 1.0, 0.6}}) {
    const CatalogSurface s = CatalogSurface::make(id, a, l);
    const auto src = bjorling_source(s);
    const BjorlingData data = make_bjorling_data(src->curve, src->normal);
    const VerificationReport r = bjorling_recovery(make_patch(s), data, us);
    EXPECT_TRUE(r.passed()) << s.label();
    const Check* n = r.find("bjorling.normal");
    ASSERT_NE(n, nullptr);
    ASSERT_EQ(n->details.size(), 1u);
    EXPECT_EQ(n->details[0].first, "normal_sign");
    EXPECT_EQ(std::abs(n->details[0].second), 1.0);
  }
}

TEST(Recovery, MismatchedPairFails) {
  const BjorlingData data =
      make_bjorling_data(CurveFamily::circle(CurveKind::CircleTimelike), NormalFieldSpec::linear(1.0));
  const VerificationReport r = bjorling_recovery(catalog(SurfaceId::BendingTimelike, 2.0), data, {-0.5, 0.5});
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("bjorling.normal")->pass);
}

TEST(Equivariance, RotationalAndHelicoidalFamilies) {
  const std::vector<double> thetas{-1.0, 0.25, 0.5, 2.0};
  const Check ec = equivariance(catalog(SurfaceId::EllipticCatenoid, 1.0), MotionGroup::rot_timelike(), thetas, square(9));
  EXPECT_TRUE(ec.pass) << ec.max_residual;
  EXPECT_EQ(ec.name, "equivariance.G_t");
  const Check hc = equivariance(catalog(SurfaceId::HyperbolicCatenoid, 0.5), MotionGroup::rot_spacelike(), thetas, square(9));
  EXPECT_TRUE(hc.pass) << hc.max_residual;
  const Check ht = equivariance(catalog(SurfaceId::HelicoidTimelikeConst, 1.0, 0.6), MotionGroup::screw_timelike(0.6),
                                thetas, square(9));
  EXPECT_TRUE(ht.pass) << ht.max_residual;
  EXPECT_EQ(ht.name, "equivariance.Phi_t");
  const Check lr = equivariance(catalog(SurfaceId::LightlikeRotational, 0.0), MotionGroup::rot_lightlike(), thetas, square(9));
  EXPECT_TRUE(lr.pass) << lr.max_residual;
}

TEST(Equivariance, LightlikeRotationalHandValue) {
  // at a = 0, u = 0 the x coordinate gains (theta^2 / 2)(1 - v)
  const SurfacePatch p = catalog(SurfaceId::LightlikeRotational, 0.0);
  const Vec3R moved = MotionGroup::rot_lightlike().at(0.5).apply(p(0.0, 0.3));
  EXPECT_LT(testing_support::dist(moved, p(0.5, 0.3)), 1e-14);
  EXPECT_NEAR(moved.x - p(0.0, 0.3).x, 0.125 * 0.7, 1e-14);
}

TEST(Equivariance, DetectsMissingSymmetry) {
  const Check c = equivariance(catalog(SurfaceId::BendingTimelike, 1.0), MotionGroup::rot_timelike(), {0.5}, square(5));
  EXPECT_FALSE(c.pass);
  EXPECT_GT(c.max_residual, 1e-3);
}

TEST(Deviation, InfiniteOnNaN) {
  SurfacePatch bad = plane();
  bad.eval = [](double, double) { return Vec3R{std::nan(""), 0, 0}; };
  EXPECT_TRUE(std::isinf(max_deviation(plane(), bad, square(3))));
  EXPECT_EQ(max_deviation(plane(), plane(), square(3)), 0.0);
}

TEST(Report, FindAppendAndPassed) {
  VerificationReport a, b;
  a.add(make_check("one", 0.5, 1.0));
  b.add(make_check("two", 2.0, 1.0));
  b.skipped.push_back("three");
  EXPECT_TRUE(a.passed());
  a.append(b);
  EXPECT_FALSE(a.passed());
  ASSERT_NE(a.find("two"), nullptr);
  EXPECT_EQ(a.find("missing"), nullptr);
  EXPECT_EQ(a.skipped.size(), 1u);
}
