#include "maxsurf/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace maxsurf {

namespace {

struct NodeValue {
  double residual = 0;
  bool spacelike = false;
};

GridMaximum reduce(const Grid& grid, const std::vector<NodeValue>& values) {
  GridMaximum out;
  for (int k = 0; k < grid.size(); ++k) {
    const NodeValue& nv = values[k];
    if (!nv.spacelike) {
      out.excluded.push_back({grid.u(k % grid.nu), grid.v(k / grid.nu)});
      continue;
    }
    ++out.evaluated;
    // NaN must not disappear into std::max
    if (std::isnan(nv.residual) || std::isnan(out.max_residual))
      out.max_residual = std::numeric_limits<double>::quiet_NaN();
    else
      out.max_residual = std::max(out.max_residual, nv.residual);
  }
  return out;
}

template <class F>
GridMaximum grid_maximum(const SurfacePatch& p, const Grid& grid, double h, double tol,
                         kernels::Backend backend, F&& residual) {
  grid.validate();
  const std::vector<NodeValue> values = kernels::map_index<NodeValue>(
      grid.size(),
      [&](int k) {
        const FundamentalForms ff =
            fundamental_forms(p, grid.u(k % grid.nu), grid.v(k / grid.nu), h, tol);
        return NodeValue{ff.spacelike ? residual(ff) : 0.0, ff.spacelike};
      },
      backend);
  return reduce(grid, values);
}

}  // namespace

FundamentalForms fundamental_forms(const SurfacePatch& p, double u, double v, double h,
                                   double tol) {
  const PatchJet j = differentiate(p, u, v, h);
  FundamentalForms ff;
  ff.E = lorentz_dot(j.xu, j.xu);
  ff.F = lorentz_dot(j.xu, j.xv);
  ff.G = lorentz_dot(j.xv, j.xv);
  const double det = ff.E * ff.G - ff.F * ff.F;
  const double scale = 0.5 * (euclid_dot(j.xu, j.xu) + euclid_dot(j.xv, j.xv));
  ff.area_ratio = scale > 0.0 ? std::sqrt(std::max(det, 0.0)) / scale : 0.0;
  ff.spacelike = ff.E > 0.0 && det > 0.0 && ff.area_ratio > tol;

  const Vec3R n = lorentz_cross(j.xu, j.xv);
  const double nn = std::abs(lorentz_dot(n, n));
  if (nn > 0.0 && std::isfinite(nn)) {
    ff.normal = n / std::sqrt(nn);
    ff.e = lorentz_dot(j.xuu, ff.normal);
    ff.f = lorentz_dot(j.xuv, ff.normal);
    ff.g = lorentz_dot(j.xvv, ff.normal);
  }
  return ff;
}

double mean_curvature(const FundamentalForms& ff) {
  return (ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g * ff.E) / (2.0 * (ff.E * ff.G - ff.F * ff.F));
}

GridMaximum mean_curvature_residual(const SurfacePatch& p, const Grid& grid, double h,
                                    double tol, kernels::Backend backend) {
  return grid_maximum(p, grid, h, tol, backend,
                      [](const FundamentalForms& ff) { return std::abs(mean_curvature(ff)); });
}

GridMaximum conformality_residual(const SurfacePatch& p, const Grid& grid, double h, double tol,
                                  kernels::Backend backend) {
  return grid_maximum(p, grid, h, tol, backend, [](const FundamentalForms& ff) {
    return std::max(std::abs(ff.E - ff.G), std::abs(ff.F)) / (0.5 * (ff.E + ff.G));
  });
}

std::vector<std::uint8_t> spacelike_region(const SurfacePatch& p, const Grid& grid, double tol,
                                           double h, kernels::Backend backend) {
  grid.validate();
  return kernels::map_index<std::uint8_t>(
      grid.size(),
      [&](int k) -> std::uint8_t {
        return fundamental_forms(p, grid.u(k % grid.nu), grid.v(k / grid.nu), h, tol).spacelike;
      },
      backend);
}

double max_deviation(const SurfacePatch& a, const SurfacePatch& b, const Grid& grid,
                     kernels::Backend backend) {
  grid.validate();
  return kernels::max_index(
      grid.size(),
      [&](int k) {
        const double u = grid.u(k % grid.nu), v = grid.v(k / grid.nu);
        const double d = euclid_norm(a(u, v) - b(u, v));
        return std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
      },
      backend);
}

Check make_check(std::string name, double residual, double tolerance, std::optional<Grid> grid) {
  Check c;
  c.name = std::move(name);
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.pass = residual < tolerance;
  c.grid = grid;
  return c;
}

bool VerificationReport::passed() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport bjorling_recovery(const SurfacePatch& p, const BjorlingData& data,
                                     const std::vector<double>& us, double h,
                                     RecoveryTolerances tol) {
  if (us.empty()) throw std::invalid_argument("bjorling_recovery: no sample points");
  double pos = 0.0, nrm = 0.0;
  double sign = 0.0;
  for (double u : us) {
    const Vec3R alpha = real_part(data.alpha.position(Complex(u)));
    pos = std::max(pos, euclid_norm(p(u, 0.0) - alpha));

    const Vec3R V = real_part(data.normal(Complex(u)));
    const FundamentalForms ff = fundamental_forms(p, u, 0.0, h);
    if (sign == 0.0) sign = lorentz_dot(ff.normal, V) < 0.0 ? 1.0 : -1.0;
    nrm = std::max(nrm, euclid_norm(ff.normal - sign * V));
  }
  VerificationReport r;
  r.add(make_check("bjorling.position", pos, tol.position));
  Check n = make_check("bjorling.normal", nrm, tol.normal);
  n.details.emplace_back("normal_sign", sign);
  r.add(std::move(n));
  return r;
}

Check equivariance(const SurfacePatch& p, const MotionGroup& group,
                   const std::vector<double>& thetas, const Grid& grid, double tol,
                   kernels::Backend backend) {
  grid.validate();
  double worst = 0.0, eta = 0.0;
  for (double theta : thetas) {
    const RigidMotion m = group.at(theta);
    eta = std::max(eta, eta_residual(m.linear));
    worst = std::max(worst, kernels::max_index(
                                grid.size(),
                                [&](int k) {
                                  const double u = grid.u(k % grid.nu), v = grid.v(k / grid.nu);
                                  const double d = euclid_norm(m.apply(p(u, v)) - p(u + theta, v));
                                  return std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
                                },
                                backend));
  }
  Check c = make_check(std::string("equivariance.") + to_string(group.kind()), worst, tol, grid);
  c.details.emplace_back("eta_residual", eta);
  return c;
}

SurfacePatch transform_patch(const SurfacePatch& p, const RigidMotion& m) {
  SurfacePatch out;
  out.eval = [p, m](double u, double v) { return m.apply(p(u, v)); };
  out.domain = p.domain;
  out.family = p.family;
  if (p.du) out.du = [d = *p.du, m](double u, double v) { return m.linear * d(u, v); };
  if (p.dv) out.dv = [d = *p.dv, m](double u, double v) { return m.linear * d(u, v); };
  return out;
}

}  // namespace maxsurf
