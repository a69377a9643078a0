#include "maxsurf/bjorling.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "maxsurf/error.hpp"

namespace maxsurf {

void QuadratureSpec::validate() const {
  if (rule == Rule::GaussLegendre && nodes < 4) {
    throw std::invalid_argument("quadrature: Gauss-Legendre needs at least 4 nodes");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature: tol must be positive");
}

Vec3C bjorling_integrand(const BjorlingData& data, Complex w) {
  return lorentz_cross(data.normal(w), data.alpha.tangent(w));
}

SurfacePatch solve_bjorling(const BjorlingData& data, const QuadratureSpec& quad, Rect domain) {
  quad.validate();
  auto rule = std::make_shared<const GaussLegendreRule>(gauss_legendre(quad.nodes));
  const AnalyticMap integrand = [data](Complex w) { return bjorling_integrand(data, w); };

  SurfacePatch patch;
  patch.domain = domain;
  patch.family = "bjorling";
  patch.eval = [data, quad, rule, integrand](double u, double v) {
    const Complex z(u, v);
    const Complex start(data.u0, 0.0);
    const bool adaptive = quad.rule == QuadratureSpec::Rule::AdaptiveSimpson ||
                          std::abs(v) > quad.fallback_abs_v;
    const Vec3C integral = adaptive ? integrate_segment_adaptive(integrand, start, z, quad.tol)
                                    : integrate_segment(integrand, start, z, *rule);
    return real_part(data.alpha.position(z) + Complex(0.0, 1.0) * integral);
  };
  return patch;
}

Vec3R reference_normal(const BjorlingData& data, const SurfacePatch& patch, double u, double h) {
  const auto [xu, xv] = tangents(patch, u, 0.0, h);
  const Vec3R n = lorentz_cross(xu, xv);
  const double q = lorentz_dot(n, n);
  const double scale = euclid_dot(xu, xu) * euclid_dot(xv, xv);
  if (!(q < 0.0) || std::abs(q) <= 1e-14 * scale) {
    std::ostringstream msg;
    msg << "reference_normal: degenerate tangent plane at (" << u << ", 0)";
    throw NumericalError(msg.str());
  }
  Vec3R unit = n / std::sqrt(-q);
  // Pick the sheet of the hyperboloid that contains V(u).
  if (lorentz_dot(unit, real_part(data.normal(u))) > 0.0) unit = -unit;
  return unit;
}

}  // namespace maxsurf
