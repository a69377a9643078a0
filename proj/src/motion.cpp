#include "maxsurf/motion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxsurf {

Mat3 Mat3::identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
  return t;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 p;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return p;
}

Vec3R operator*(const Mat3& a, const Vec3R& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

double eta_residual(const Mat3& m) {
  const Mat3 eta{{1, 0, 0, 0, 1, 0, 0, 0, -1}};
  const Mat3 r = m.transpose() * eta * m;
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) worst = std::max(worst, std::abs(r.m[i] - eta.m[i]));
  return worst;
}

MotionGroup MotionGroup::rot_timelike() { return {Kind::RotTimelike, 0.0}; }
MotionGroup MotionGroup::rot_spacelike() { return {Kind::RotSpacelike, 0.0}; }
MotionGroup MotionGroup::rot_lightlike() { return {Kind::RotLightlike, 0.0}; }

MotionGroup MotionGroup::screw_timelike(double pitch) {
  if (!std::isfinite(pitch)) throw std::invalid_argument("screw_timelike: pitch must be finite");
  return {Kind::ScrewTimelike, pitch};
}

RigidMotion MotionGroup::at(double t) const {
  RigidMotion g;
  const double c = std::cos(t), s = std::sin(t);
  switch (kind_) {
    case Kind::RotTimelike:
      g.linear = {{c, -s, 0, s, c, 0, 0, 0, 1}};
      break;
    case Kind::ScrewTimelike:
      g.linear = {{c, -s, 0, s, c, 0, 0, 0, 1}};
      g.translation = {0.0, 0.0, pitch_ * t};
      break;
    case Kind::RotSpacelike: {
      const double ch = std::cosh(t), sh = std::sinh(t);
      g.linear = {{1, 0, 0, 0, ch, sh, 0, sh, ch}};
      break;
    }
    case Kind::RotLightlike: {
      const double h = 0.5 * t * t;
      g.linear = {{1 - h, t, h, -t, 1, t, -h, t, h + 1}};
      break;
    }
  }
  return g;
}

const char* to_string(MotionGroup::Kind k) {
  switch (k) {
    case MotionGroup::Kind::RotTimelike:
      return "G_t";
    case MotionGroup::Kind::RotSpacelike:
      return "G_s";
    case MotionGroup::Kind::RotLightlike:
      return "G_l";
    case MotionGroup::Kind::ScrewTimelike:
      return "Phi_t";
  }
  return "unknown";
}

}  // namespace maxsurf
