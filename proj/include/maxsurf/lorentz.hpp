#pragma once

// Lorentzian linear algebra on real and complex 3-vectors.
//
// The metric is <u,v> = u.x v.x + u.y v.y - u.z v.z. Complex vectors use the
// bilinear extension of the metric and of the cross product (never the
// Hermitian one), so holomorphic maps stay holomorphic under both.

#include <cmath>
#include <complex>
#include <functional>
#include <ostream>

namespace maxsurf {

using Complex = std::complex<double>;

template <class T>
struct Vec3 {
  T x{};
  T y{};
  T z{};

  constexpr Vec3() = default;
  constexpr Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  // Real vectors promote to complex ones.
  template <class U>
    requires(!std::is_same_v<U, T> && std::is_constructible_v<T, U>)
  constexpr Vec3(const Vec3<U>& o) : x(T(o.x)), y(T(o.y)), z(T(o.z)) {}

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(T s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(T s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator*(Vec3 a, T s) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, T s) { return {a.x / s, a.y / s, a.z / s}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using Vec3R = Vec3<double>;
using Vec3C = Vec3<Complex>;

inline Vec3C operator*(Complex s, const Vec3R& a) { return s * Vec3C(a); }
inline Vec3C operator*(double s, const Vec3C& a) { return Complex(s) * a; }

inline std::ostream& operator<<(std::ostream& os, const Vec3R& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

/// Lorentzian inner product dx^2 + dy^2 - dz^2 (bilinear for complex input).
template <class T>
constexpr T lorentz_dot(const Vec3<T>& u, const Vec3<T>& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

/// Lorentzian cross product, normalized so that <u x v, w> = det(u, v, w).
template <class T>
constexpr Vec3<T> lorentz_cross(const Vec3<T>& u, const Vec3<T>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, -(u.x * v.y - u.y * v.x)};
}

/// Euclidean dot product; used for norms and error measurement only.
inline double euclid_dot(const Vec3R& u, const Vec3R& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

inline double euclid_norm(const Vec3R& v) { return std::sqrt(euclid_dot(v, v)); }

/// Euclidean norm of a complex vector (sqrt of sum of |component|^2).
inline double euclid_norm(const Vec3C& v) {
  return std::sqrt(std::norm(v.x) + std::norm(v.y) + std::norm(v.z));
}

/// Determinant of the matrix with rows u, v, w.
inline double det3(const Vec3R& u, const Vec3R& v, const Vec3R& w) {
  return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
         u.z * (v.x * w.y - v.y * w.x);
}

inline Vec3R real_part(const Vec3C& v) { return {v.x.real(), v.y.real(), v.z.real()}; }
inline Vec3R imag_part(const Vec3C& v) { return {v.x.imag(), v.y.imag(), v.z.imag()}; }

inline bool is_finite(const Vec3R& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

const char* to_string(CausalCharacter c);

/// Lightlike band used when no tolerance is given: 1e-10 * (1 + |v|^2).
double default_causal_tolerance(const Vec3R& v);

/// Classifies v by the sign of <v,v>; |<v,v>| <= tol counts as lightlike.
CausalCharacter causal_character(const Vec3R& v, double tol);
CausalCharacter causal_character(const Vec3R& v);

/// Closed-form analytic maps C -> C^3 and C -> C.
using AnalyticMap = std::function<Vec3C(Complex)>;
using ScalarMap = std::function<Complex(Complex)>;

}  // namespace maxsurf
