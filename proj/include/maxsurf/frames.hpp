#pragma once

// Core curves (circles and helices of L^3 classified by the causal character
// of their axis), their moving frames, and unit timelike normal fields along
// them. All evaluators accept complex arguments: the closed forms are entire,
// so substituting z = u + iv gives the holomorphic extension directly.

#include <string>

#include "maxsurf/lorentz.hpp"

namespace maxsurf {

enum class CurveKind {
  CircleTimelike,    // alpha(t) = (cos t, sin t, 0), axis (0,0,1)
  CircleSpacelike,   // alpha(t) = (0, sinh t, cosh t), axis (1,0,0)
  CircleLightlike,   // alpha(t) = (-1 + t^2/2, t, t^2/2), axis (1,0,1)
  HelixTimelike,     // alpha(t) = (cos t, sin t, lambda t), 0 < lambda < 1
  HelixSpacelikeI,   // alpha(t) = (lambda t, cosh t, sinh t), lambda > 1
  HelixSpacelikeII,  // alpha(t) = (lambda t, sinh t, cosh t), lambda > 0
};

const char* to_string(CurveKind k);

/// A core curve. Helices carry the pitch lambda and the derived mu.
class CurveFamily {
 public:
  /// Throws std::invalid_argument when lambda is outside the family's range.
  static CurveFamily circle(CurveKind kind);
  static CurveFamily helix(CurveKind kind, double lambda);

  CurveKind kind() const { return kind_; }
  bool is_helix() const;
  double lambda() const { return lambda_; }
  /// sqrt(1 - l^2), sqrt(l^2 - 1) or sqrt(l^2 + 1) for the three helix types.
  double mu() const { return mu_; }

 private:
  CurveFamily(CurveKind kind, double lambda, double mu) : kind_(kind), lambda_(lambda), mu_(mu) {}

  CurveKind kind_;
  double lambda_ = 0.0;
  double mu_ = 0.0;
};

struct AnalyticCurve {
  AnalyticMap position;
  AnalyticMap tangent;  // derivative of position
};

AnalyticCurve make_curve(const CurveFamily& family);

/// Frame vectors exactly as the closed forms give them. For the
/// lightlike-axis circle n and b are null with <n,b> = -1/2, and
/// e2 = n - b, e3 = n + b form the orthonormal pair.
///
/// `spacelike` and `timelike` name the orthonormal pair spanning the normal
/// plane of the curve; a unit timelike normal field is
/// sinh(phi) * spacelike + cosh(phi) * timelike.
struct FrameField {
  AnalyticMap t;  // unit tangent
  AnalyticMap n;
  AnalyticMap b;
  AnalyticMap e2;  // lightlike axis only
  AnalyticMap e3;  // lightlike axis only
  AnalyticMap spacelike;
  AnalyticMap timelike;
};

FrameField make_frame(const CurveFamily& family);

/// phi(t) = a (Constant) or phi(t) = a t (Linear).
struct NormalFieldSpec {
  enum class Kind { Constant, Linear };

  Kind kind = Kind::Constant;
  double a = 0.0;

  static NormalFieldSpec constant(double a);
  /// Linear(0) is the same field as Constant(0) and is stored that way.
  /// Throws std::invalid_argument for a < 0.
  static NormalFieldSpec linear(double a);

  double phi(double t) const { return kind == Kind::Linear ? a * t : a; }
  Complex phi(Complex t) const { return kind == Kind::Linear ? a * t : Complex(a); }
};

/// V = sinh(phi) * spacelike + cosh(phi) * timelike. Throws
/// std::invalid_argument for a Linear field on the lightlike-axis circle,
/// whose Björling integrand has no elementary antiderivative.
AnalyticMap make_normal_field(const CurveFamily& family, const NormalFieldSpec& spec);

/// Input of the Björling problem: a core curve, a unit timelike normal field
/// along it, and the base point of the integral.
struct BjorlingData {
  AnalyticCurve alpha;
  AnalyticMap normal;
  double u0 = 0.0;
};

BjorlingData make_bjorling_data(const CurveFamily& family, const NormalFieldSpec& spec,
                                double u0 = 0.0);

/// Pointwise quantities behind the BjorlingData invariants at a real t.
struct BjorlingDataSample {
  double tangent_square;     // <alpha', alpha'>, must be > 0
  double normal_square;      // <V, V>, must be -1
  double normal_tangent;     // <V, alpha'>, must be 0
  double normal_z;           // V.z
  double normal_euclid_sq;   // |V|^2 in the Euclidean sense, for relative tolerances
};

BjorlingDataSample sample_bjorling_data(const BjorlingData& data, double t);

}  // namespace maxsurf
