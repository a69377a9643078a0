#pragma once

// Closed-form maximal surfaces built on circles and helices.
//
// Bending helicoids take the circle as core curve and a normal field that
// twists linearly along it; helicoidal helicoids do the same over a helix.
// Constant-twist fields give rotational surfaces (the elliptic and
// hyperbolic catenoids, the lightlike-axis rotational surface) and the
// helicoidal surface over the timelike helix. The Enneper surface of the
// second kind is the G_l orbit of a cubic generating curve.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxsurf/frames.hpp"
#include "maxsurf/motion.hpp"
#include "maxsurf/patch.hpp"

namespace maxsurf {

enum class SurfaceId {
  BendingTimelike,
  BendingSpacelike,
  LightlikeRotational,
  HelicoidalTimelike,
  HelicoidalSpacelikeI,
  HelicoidalSpacelikeII,
  EllipticCatenoid,
  HyperbolicCatenoid,
  HelicoidTimelikeConst,
  EnneperSecondKind,
};

const char* to_string(SurfaceId id);
std::optional<SurfaceId> surface_id_from_string(std::string_view name);
const std::vector<SurfaceId>& all_surface_ids();

/// beta(v) = (h(v) + v, 0, h(v) - v) with h(v) = lambda v^3 + mu.
struct GeneratingCurve {
  double lambda = 1.0;
  double mu = 0.0;

  /// The constants for which the G_l orbit passes through the
  /// lightlike-axis circle at v = -1/2 with normal sinh(a) e2 + cosh(a) e3:
  /// mu = -(cosh a - 2 sinh a)(sinh a + cosh a) / 3, lambda = 8 mu + 4.
  static GeneratingCurve for_lightlike_circle(double a);
};

class CatalogSurface {
 public:
  /// Validating constructor. `lambda` is the helix pitch for helix-based
  /// families and is ignored otherwise; EnneperSecondKind uses
  /// enneper_second_kind() instead. Throws std::invalid_argument.
  static CatalogSurface make(SurfaceId id, double a, double lambda = 0.0);
  static CatalogSurface enneper_second_kind(const GeneratingCurve& g);

  SurfaceId id() const { return id_; }
  double a() const { return a_; }
  double lambda() const { return lambda_; }
  /// Helix mu for helix-based families, 0 otherwise.
  double mu() const { return mu_; }
  const GeneratingCurve& generating() const { return generating_; }

  /// e.g. "BendingSpacelike(a=1)".
  std::string label() const;

 private:
  CatalogSurface() = default;

  SurfaceId id_ = SurfaceId::BendingTimelike;
  double a_ = 0.0;
  double lambda_ = 0.0;
  double mu_ = 0.0;
  GeneratingCurve generating_;
};

/// Closed-form X(u, v). For the spacelike bending helicoid and both
/// spacelike helicoidal helicoids the a = 1 formula is used when
/// |a - 1| < 1e-6, a cancellation-free rewrite when |a - 1| < 1e-3, and the
/// general formula otherwise.
Vec3R eval_surface(const CatalogSurface& s, double u, double v);

SurfacePatch make_patch(const CatalogSurface& s, Rect domain = {});

/// Björling data whose solution is this surface, in the same (u, v)
/// parametrization. Empty for EnneperSecondKind, which is an orbit
/// parametrization.
struct BjorlingSource {
  CurveFamily curve;
  NormalFieldSpec normal;
};
std::optional<BjorlingSource> bjorling_source(const CatalogSurface& s);

/// The group under which X(u + theta, v) = g(theta) X(u, v), for the
/// rotational and helicoidal constant-twist families.
std::optional<MotionGroup> symmetry_group(const CatalogSurface& s);

Vec3R eval_generating_curve(const GeneratingCurve& g, double v);

/// |c (s - f)^3 + (s - f) - 2 s - b| with (s, f) = (h(v) + v, h(v) - v): the
/// first integral of H = 0 for rotational surfaces about the lightlike axis.
/// Vanishes identically for c = lambda / 4, b = -2 mu. Throws for c <= 0.
double ode_residual(const GeneratingCurve& g, double c, double b, double v);

/// Z(u, v) = Psi_l(u) beta(v).
Vec3R eval_enneper_orbit(const GeneratingCurve& g, double u, double v);

/// |Z(u, -1/2) - alpha(u)| for the constants of for_lightlike_circle(a).
double lightlike_identification_check(double a, double u);

/// Formula transcriptions kept separately so tests can probe the a -> 1
/// behaviour of each branch directly.
namespace formulas {

Vec3R bending_spacelike_general(double a, double u, double v);
Vec3R bending_spacelike_unit(double u, double v);
Vec3R bending_spacelike_compensated(double a, double u, double v);

Vec3R helicoidal_spacelike_i_general(double a, double lambda, double u, double v);
Vec3R helicoidal_spacelike_i_unit(double lambda, double u, double v);
Vec3R helicoidal_spacelike_i_compensated(double a, double lambda, double u, double v);

Vec3R helicoidal_spacelike_ii_general(double a, double lambda, double u, double v);
Vec3R helicoidal_spacelike_ii_unit(double lambda, double u, double v);
Vec3R helicoidal_spacelike_ii_compensated(double a, double lambda, double u, double v);

}  // namespace formulas

}  // namespace maxsurf
