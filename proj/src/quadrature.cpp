#include "maxsurf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maxsurf/error.hpp"

namespace maxsurf {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Vec3C integrate_segment(const AnalyticMap& f, Complex a, Complex b, const GaussLegendreRule& rule) {
  const Complex half = 0.5 * (b - a);
  const Complex mid = 0.5 * (b + a);
  Vec3C acc;
  for (int i = 0; i < rule.size(); ++i) {
    acc += Complex(rule.weights[i]) * f(mid + half * rule.nodes[i]);
  }
  return half * acc;
}

Complex integrate_segment(const ScalarMap& f, Complex a, Complex b, const GaussLegendreRule& rule) {
  const Complex half = 0.5 * (b - a);
  const Complex mid = 0.5 * (b + a);
  Complex acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

namespace {

struct SimpsonPanel {
  Complex a, b;
  Vec3C fa, fm, fb;
  Vec3C whole;
};

Vec3C simpson(Complex a, Complex b, const Vec3C& fa, const Vec3C& fm, const Vec3C& fb) {
  return ((b - a) / 6.0) * (fa + Complex(4.0) * fm + fb);
}

Vec3C refine(const AnalyticMap& f, const SimpsonPanel& p, double tol, int depth, int max_depth) {
  const Complex m = 0.5 * (p.a + p.b);
  const Complex lm = 0.5 * (p.a + m);
  const Complex rm = 0.5 * (m + p.b);
  const Vec3C flm = f(lm);
  const Vec3C frm = f(rm);
  const Vec3C left = simpson(p.a, m, p.fa, flm, p.fm);
  const Vec3C right = simpson(m, p.b, p.fm, frm, p.fb);
  const Vec3C delta = left + right - p.whole;
  // The floor keeps deep levels from chasing tolerances below roundoff.
  const double mass = std::abs(p.b - p.a) *
                      (euclid_norm(p.fa) + 4.0 * euclid_norm(p.fm) + euclid_norm(p.fb)) / 6.0;
  const double floor = 4e-16 * std::max(euclid_norm(left + right), mass);
  if (euclid_norm(delta) <= 15.0 * std::max(tol, floor)) return left + right + delta / Complex(15.0);
  if (depth >= max_depth) {
    std::ostringstream msg;
    msg << "adaptive Simpson did not converge on segment [" << p.a << ", " << p.b << "]";
    throw NumericalError(msg.str());
  }
  return refine(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, depth + 1, max_depth) +
         refine(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

Vec3C integrate_segment_adaptive(const AnalyticMap& f, Complex a, Complex b, double tol,
                                 int max_depth) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_segment_adaptive: tol must be positive");
  if (a == b) return {};
  const Complex m = 0.5 * (a + b);
  const Vec3C fa = f(a);
  const Vec3C fm = f(m);
  const Vec3C fb = f(b);
  const double scale = std::max(
      1.0, std::abs(b - a) * (euclid_norm(fa) + 4.0 * euclid_norm(fm) + euclid_norm(fb)) / 6.0);
  try {
    return refine(f, {a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tol * scale, 0, max_depth);
  } catch (const NumericalError& e) {
    std::ostringstream msg;
    msg << e.what() << " while integrating to z = " << b;
    throw NumericalError(msg.str());
  }
}

}  // namespace maxsurf
