#pragma once

#include <vector>

#include "maxsurf/lorentz.hpp"

namespace maxsurf {

/// Nodes and weights of an n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Computes the rule by Newton iteration on P_n; n >= 1.
GaussLegendreRule gauss_legendre(int n);

/// Integral of f along the straight segment from a to b.
Vec3C integrate_segment(const AnalyticMap& f, Complex a, Complex b, const GaussLegendreRule& rule);
Complex integrate_segment(const ScalarMap& f, Complex a, Complex b, const GaussLegendreRule& rule);

/// Adaptive Simpson along the segment from a to b. tol is absolute for
/// integrals of unit size and scales with |b - a| * |f| beyond that. Throws NumericalError
/// when the local error estimate cannot be driven below tol within
/// max_depth bisections.
Vec3C integrate_segment_adaptive(const AnalyticMap& f, Complex a, Complex b, double tol,
                                 int max_depth = 48);

}  // namespace maxsurf
