#include "maxsurf/patch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxsurf {

void Grid::validate() const {
  if (nu < 2 || nv < 2) throw std::invalid_argument("grid: nu and nv must be >= 2");
  for (double b : {rect.u_min, rect.u_max, rect.v_min, rect.v_max}) {
    if (!std::isfinite(b)) throw std::invalid_argument("grid: bounds must be finite");
  }
  if (!(rect.u_min < rect.u_max) || !(rect.v_min < rect.v_max)) {
    throw std::invalid_argument("grid: bounds must satisfy min < max");
  }
}

double Grid::u(int i) const {
  return i == nu - 1 ? rect.u_max : rect.u_min + (rect.u_max - rect.u_min) * i / (nu - 1);
}

double Grid::v(int j) const {
  return j == nv - 1 ? rect.v_max : rect.v_min + (rect.v_max - rect.v_min) * j / (nv - 1);
}

Grid Grid::interior() const {
  if (nu < 3 || nv < 3) throw std::invalid_argument("grid: interior needs nu, nv >= 3");
  return {{u(1), u(nu - 2), v(1), v(nv - 2)}, nu - 2, nv - 2};
}

namespace {

struct Stencil {
  Vec3R xu, xv, xuu, xuv, xvv;
};

Stencil central(const SurfacePatch& p, double u, double v, double hu, double hv, bool second) {
  const Vec3R c = p(u, v);
  const Vec3R ep = p(u + hu, v);
  const Vec3R em = p(u - hu, v);
  const Vec3R np = p(u, v + hv);
  const Vec3R nm = p(u, v - hv);
  Stencil s;
  s.xu = (ep - em) / (2.0 * hu);
  s.xv = (np - nm) / (2.0 * hv);
  if (second) {
    s.xuu = (ep - 2.0 * c + em) / (hu * hu);
    s.xvv = (np - 2.0 * c + nm) / (hv * hv);
    s.xuv = (p(u + hu, v + hv) - p(u + hu, v - hv) - p(u - hu, v + hv) + p(u - hu, v - hv)) /
            (4.0 * hu * hv);
  }
  return s;
}

Vec3R richardson(const Vec3R& coarse, const Vec3R& fine) { return (4.0 * fine - coarse) / 3.0; }

}  // namespace

PatchJet differentiate(const SurfacePatch& p, double u, double v, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("differentiate: step must be positive");
  const double hu = h * std::max(1.0, std::abs(u));
  const double hv = h * std::max(1.0, std::abs(v));
  const Stencil c = central(p, u, v, hu, hv, true);
  const Stencil f = central(p, u, v, 0.5 * hu, 0.5 * hv, true);
  return {p(u, v),
          richardson(c.xu, f.xu),
          richardson(c.xv, f.xv),
          richardson(c.xuu, f.xuu),
          richardson(c.xuv, f.xuv),
          richardson(c.xvv, f.xvv)};
}

std::pair<Vec3R, Vec3R> tangents(const SurfacePatch& p, double u, double v, double h) {
  if (p.du && p.dv) return {(*p.du)(u, v), (*p.dv)(u, v)};
  if (!(h > 0.0)) throw std::invalid_argument("tangents: step must be positive");
  const double hu = h * std::max(1.0, std::abs(u));
  const double hv = h * std::max(1.0, std::abs(v));
  const Stencil c = central(p, u, v, hu, hv, false);
  const Stencil f = central(p, u, v, 0.5 * hu, 0.5 * hv, false);
  return {richardson(c.xu, f.xu), richardson(c.xv, f.xv)};
}

}  // namespace maxsurf
