#pragma once

// One-parameter groups of Lorentzian rigid motions: rotations about a
// timelike, spacelike or lightlike axis, and the screw motion about the
// timelike axis (0,0,1).

#include <array>

#include "maxsurf/lorentz.hpp"

namespace maxsurf {

struct Mat3 {
  std::array<double, 9> m{};  // row-major

  static Mat3 identity();
  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }
  Mat3 transpose() const;
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3R operator*(const Mat3& a, const Vec3R& v);
};

/// Max-abs entry of M^T eta M - eta with eta = diag(1, 1, -1).
double eta_residual(const Mat3& m);

struct RigidMotion {
  Mat3 linear = Mat3::identity();
  Vec3R translation;

  Vec3R apply(const Vec3R& p) const { return linear * p + translation; }
};

class MotionGroup {
 public:
  enum class Kind { RotTimelike, RotSpacelike, RotLightlike, ScrewTimelike };

  static MotionGroup rot_timelike();   // axis (0,0,1)
  static MotionGroup rot_spacelike();  // axis (1,0,0)
  static MotionGroup rot_lightlike();  // axis spanned by (1,0,1)
  static MotionGroup screw_timelike(double pitch);

  Kind kind() const { return kind_; }
  double pitch() const { return pitch_; }
  RigidMotion at(double theta) const;

 private:
  MotionGroup(Kind k, double pitch) : kind_(k), pitch_(pitch) {}

  Kind kind_;
  double pitch_ = 0.0;
};

const char* to_string(MotionGroup::Kind k);

}  // namespace maxsurf
