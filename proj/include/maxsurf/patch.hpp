#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "maxsurf/lorentz.hpp"

namespace maxsurf {

struct Rect {
  double u_min = -1.0;
  double u_max = 1.0;
  double v_min = -1.0;
  double v_max = 1.0;
};

/// Tensor grid of nu x nv nodes spanning a rectangle (both ends included).
/// Node (i, j) has linear index j * nu + i: u varies fastest.
struct Grid {
  Rect rect;
  int nu = 2;
  int nv = 2;

  /// Throws std::invalid_argument unless nu, nv >= 2 and the bounds are finite
  /// and ordered.
  void validate() const;

  int size() const { return nu * nv; }
  double u(int i) const;
  double v(int j) const;
  /// The same grid shrunk by one node on each side.
  Grid interior() const;
};

/// A parametrized surface (u, v) -> L^3 on a rectangular domain.
struct SurfacePatch {
  using Map = std::function<Vec3R(double, double)>;

  Map eval;
  Rect domain;
  std::string family;
  // Exact partial derivatives when the producer knows them.
  std::optional<Map> du;
  std::optional<Map> dv;

  Vec3R operator()(double u, double v) const { return eval(u, v); }
};

/// First and second partial derivatives at a point.
struct PatchJet {
  Vec3R x, xu, xv, xuu, xuv, xvv;
};

/// Central differences with one Richardson step over {h, h/2}; the step in
/// each direction is h * max(1, |coordinate|).
PatchJet differentiate(const SurfacePatch& p, double u, double v, double h);

/// First derivatives only (cheaper); same scheme as differentiate().
std::pair<Vec3R, Vec3R> tangents(const SurfacePatch& p, double u, double v, double h);

}  // namespace maxsurf
