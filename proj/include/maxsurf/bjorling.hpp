#pragma once

// Numerical solution of the Björling problem:
//
//   X(u, v) = Re( alpha(z) + i * Integral_{u0}^{z} V(w) x alpha'(w) dw ),  z = u + iv,
//
// where x is the Lorentzian cross product. The integral is taken along the
// straight segment from u0 to z; every built-in integrand is entire, so the
// result does not depend on the path.

#include "maxsurf/frames.hpp"
#include "maxsurf/patch.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {

struct QuadratureSpec {
  enum class Rule { GaussLegendre, AdaptiveSimpson };

  Rule rule = Rule::GaussLegendre;
  int nodes = 64;
  double tol = 1e-12;
  // With Gauss-Legendre, switch to adaptive Simpson when |v| exceeds this.
  double fallback_abs_v = 2.0;

  /// Throws std::invalid_argument unless nodes >= 4 (Gauss-Legendre) or
  /// tol > 0 (adaptive Simpson).
  void validate() const;
};

/// The Björling surface of `data`. The returned patch evaluates the integral
/// on demand and may throw NumericalError (naming z) when adaptive
/// quadrature fails.
SurfacePatch solve_bjorling(const BjorlingData& data, const QuadratureSpec& quad = {},
                            Rect domain = {});

/// The integrand V(w) x alpha'(w) of the Björling formula.
Vec3C bjorling_integrand(const BjorlingData& data, Complex w);

/// Unit timelike Lorentz normal of the patch at (u, 0) from finite
/// differences, taken in the time cone of V(u); for a Björling surface of
/// `data` it equals V(u). Throws NumericalError when the
/// tangent plane degenerates there.
Vec3R reference_normal(const BjorlingData& data, const SurfacePatch& patch, double u,
                       double h = 1e-3);

}  // namespace maxsurf
