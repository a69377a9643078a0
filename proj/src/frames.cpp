#include "maxsurf/frames.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace maxsurf {

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::CircleTimelike:
      return "CircleTimelike";
    case CurveKind::CircleSpacelike:
      return "CircleSpacelike";
    case CurveKind::CircleLightlike:
      return "CircleLightlike";
    case CurveKind::HelixTimelike:
      return "HelixTimelike";
    case CurveKind::HelixSpacelikeI:
      return "HelixSpacelikeI";
    case CurveKind::HelixSpacelikeII:
      return "HelixSpacelikeII";
  }
  return "unknown";
}

bool CurveFamily::is_helix() const {
  return kind_ == CurveKind::HelixTimelike || kind_ == CurveKind::HelixSpacelikeI ||
         kind_ == CurveKind::HelixSpacelikeII;
}

CurveFamily CurveFamily::circle(CurveKind kind) {
  if (kind != CurveKind::CircleTimelike && kind != CurveKind::CircleSpacelike &&
      kind != CurveKind::CircleLightlike) {
    throw std::invalid_argument(std::string("CurveFamily::circle: ") + to_string(kind) +
                                " is a helix");
  }
  return {kind, 0.0, 0.0};
}

CurveFamily CurveFamily::helix(CurveKind kind, double lambda) {
  const auto bad = [&](const char* range) {
    return std::invalid_argument(std::string(to_string(kind)) + " requires " + range +
                                 ", got lambda = " + std::to_string(lambda));
  };
  if (!std::isfinite(lambda)) throw bad("finite lambda");
  switch (kind) {
    case CurveKind::HelixTimelike:
      if (!(lambda > 0.0 && lambda < 1.0)) throw bad("0 < lambda < 1");
      return {kind, lambda, std::sqrt(1.0 - lambda * lambda)};
    case CurveKind::HelixSpacelikeI:
      if (!(lambda > 1.0)) throw bad("lambda > 1");
      return {kind, lambda, std::sqrt(lambda * lambda - 1.0)};
    case CurveKind::HelixSpacelikeII:
      if (!(lambda > 0.0)) throw bad("lambda > 0");
      return {kind, lambda, std::sqrt(lambda * lambda + 1.0)};
    default:
      throw std::invalid_argument(std::string("CurveFamily::helix: ") + to_string(kind) +
                                  " is a circle");
  }
}

AnalyticCurve make_curve(const CurveFamily& family) {
  const double l = family.lambda();
  switch (family.kind()) {
    case CurveKind::CircleTimelike:
      return {[](Complex t) { return Vec3C{std::cos(t), std::sin(t), 0.0}; },
              [](Complex t) { return Vec3C{-std::sin(t), std::cos(t), 0.0}; }};
    case CurveKind::CircleSpacelike:
      return {[](Complex t) { return Vec3C{0.0, std::sinh(t), std::cosh(t)}; },
              [](Complex t) { return Vec3C{0.0, std::cosh(t), std::sinh(t)}; }};
    case CurveKind::CircleLightlike:
      return {[](Complex t) { return Vec3C{-1.0 + 0.5 * t * t, t, 0.5 * t * t}; },
              [](Complex t) { return Vec3C{t, 1.0, t}; }};
    case CurveKind::HelixTimelike:
      return {[l](Complex t) { return Vec3C{std::cos(t), std::sin(t), l * t}; },
              [l](Complex t) { return Vec3C{-std::sin(t), std::cos(t), l}; }};
    case CurveKind::HelixSpacelikeI:
      return {[l](Complex t) { return Vec3C{l * t, std::cosh(t), std::sinh(t)}; },
              [l](Complex t) { return Vec3C{l, std::sinh(t), std::cosh(t)}; }};
    case CurveKind::HelixSpacelikeII:
      return {[l](Complex t) { return Vec3C{l * t, std::sinh(t), std::cosh(t)}; },
              [l](Complex t) { return Vec3C{l, std::cosh(t), std::sinh(t)}; }};
  }
  throw std::logic_error("make_curve: unhandled curve kind");
}

FrameField make_frame(const CurveFamily& family) {
  const double l = family.lambda();
  const double m = family.mu();
  FrameField f;
  switch (family.kind()) {
    case CurveKind::CircleTimelike:
      f.t = [](Complex t) { return Vec3C{-std::sin(t), std::cos(t), 0.0}; };
      f.n = [](Complex t) { return Vec3C{-std::cos(t), -std::sin(t), 0.0}; };
      f.b = [](Complex) { return Vec3C{0.0, 0.0, 1.0}; };
      f.spacelike = f.n;
      f.timelike = f.b;
      break;
    case CurveKind::CircleSpacelike:
      f.t = [](Complex t) { return Vec3C{0.0, std::cosh(t), std::sinh(t)}; };
      f.n = [](Complex t) { return Vec3C{0.0, std::sinh(t), std::cosh(t)}; };
      f.b = [](Complex) { return Vec3C{1.0, 0.0, 0.0}; };
      f.spacelike = f.b;
      f.timelike = f.n;
      break;
    case CurveKind::CircleLightlike:
      f.t = [](Complex t) { return Vec3C{t, 1.0, t}; };
      f.n = [](Complex) { return Vec3C{0.5, 0.0, 0.5}; };
      f.b = [](Complex t) { return Vec3C{0.5 * (t * t - 1.0), t, 0.5 * (t * t + 1.0)}; };
      f.e2 = [](Complex t) { return Vec3C{0.5 * (2.0 - t * t), -t, -0.5 * t * t}; };
      f.e3 = [](Complex t) { return Vec3C{0.5 * t * t, t, 0.5 * (t * t + 2.0)}; };
      f.spacelike = f.e2;
      f.timelike = f.e3;
      break;
    case CurveKind::HelixTimelike:
      f.t = [l, m](Complex t) { return Vec3C{-std::sin(t), std::cos(t), l} / Complex(m); };
      f.n = [](Complex t) { return Vec3C{-std::cos(t), -std::sin(t), 0.0}; };
      f.b = [l, m](Complex t) {
        return Vec3C{l * std::sin(t), -l * std::cos(t), -1.0} / Complex(m);
      };
      f.spacelike = f.n;
      f.timelike = f.b;
      break;
    case CurveKind::HelixSpacelikeI:
      f.t = [l, m](Complex t) { return Vec3C{l, std::sinh(t), std::cosh(t)} / Complex(m); };
      f.n = [](Complex t) { return Vec3C{0.0, std::cosh(t), std::sinh(t)}; };
      f.b = [l, m](Complex t) {
        return Vec3C{1.0, l * std::sinh(t), l * std::cosh(t)} / Complex(-m);
      };
      f.spacelike = f.n;
      f.timelike = f.b;
      break;
    case CurveKind::HelixSpacelikeII:
      f.t = [l, m](Complex t) { return Vec3C{l, std::cosh(t), std::sinh(t)} / Complex(m); };
      f.n = [](Complex t) { return Vec3C{0.0, std::sinh(t), std::cosh(t)}; };
      f.b = [l, m](Complex t) {
        return Vec3C{1.0, -l * std::cosh(t), -l * std::sinh(t)} / Complex(m);
      };
      f.spacelike = f.b;
      f.timelike = f.n;
      break;
  }
  return f;
}

NormalFieldSpec NormalFieldSpec::constant(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("NormalFieldSpec: a must be finite");
  return {Kind::Constant, a};
}

NormalFieldSpec NormalFieldSpec::linear(double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::invalid_argument("NormalFieldSpec::linear requires a >= 0");
  }
  if (a == 0.0) return constant(0.0);
  return {Kind::Linear, a};
}

AnalyticMap make_normal_field(const CurveFamily& family, const NormalFieldSpec& spec) {
  if (family.kind() == CurveKind::CircleLightlike && spec.kind == NormalFieldSpec::Kind::Linear) {
    throw std::invalid_argument(
        "CircleLightlike with a linear phi is a non-integrable combination; only constant phi "
        "is supported");
  }
  const FrameField frame = make_frame(family);
  return [spec, s = frame.spacelike, tl = frame.timelike](Complex t) {
    const Complex phi = spec.phi(t);
    return std::sinh(phi) * s(t) + std::cosh(phi) * tl(t);
  };
}

BjorlingData make_bjorling_data(const CurveFamily& family, const NormalFieldSpec& spec,
                                double u0) {
  if (!std::isfinite(u0)) throw std::invalid_argument("make_bjorling_data: u0 must be finite");
  return {make_curve(family), make_normal_field(family, spec), u0};
}

BjorlingDataSample sample_bjorling_data(const BjorlingData& data, double t) {
  const Vec3R da = real_part(data.alpha.tangent(t));
  const Vec3R v = real_part(data.normal(t));
  return {lorentz_dot(da, da), lorentz_dot(v, v), lorentz_dot(v, da), v.z, euclid_dot(v, v)};
}

}  // namespace maxsurf
