#pragma once

// Holomorphic 1-forms, Weierstrass data and the maximal/minimal duality.
//
// A maximal surface is X = Re Integral (phi1, phi2, phi3) dz with the null
// condition phi1^2 + phi2^2 - phi3^2 = 0. Its data are g = phi3 / (phi1 - i phi2)
// and omega = f dz with f = phi1 - i phi2. The dual minimal surface has
// psi = (i phi1, i phi2, phi3), null in the Euclidean sense, with data (-i g, i f).

#include <string>
#include <vector>

#include "maxsurf/catalog.hpp"
#include "maxsurf/frames.hpp"
#include "maxsurf/kernels.hpp"
#include "maxsurf/quadrature.hpp"

namespace maxsurf {

/// Exp is the Björling parameter z = u + iv; Punctured is w = e^z on C \ {0}.
enum class Chart { Exp, Punctured };
enum class Signature { Lorentzian, Euclidean };

const char* to_string(Chart c);
const char* to_string(Signature s);

struct FormTriple {
  ScalarMap phi[3];
  Chart chart = Chart::Exp;
  Signature signature = Signature::Lorentzian;
  // False on the punctured chart when a w^a factor has non-integer a; those
  // coefficients use the principal branch and have no closed loops.
  bool single_valued = true;

  Vec3C operator()(Complex z) const { return {phi[0](z), phi[1](z), phi[2](z)}; }
};

/// phi1^2 + phi2^2 - phi3^2 (Lorentzian) or phi1^2 + phi2^2 + phi3^2 (Euclidean).
Complex null_form(const FormTriple& t, Complex z);

struct WeierstrassData {
  ScalarMap g;
  ScalarMap f;
  Chart chart = Chart::Exp;
  Signature signature = Signature::Lorentzian;
  std::vector<Complex> singularities;
};

/// The printed forms of a Björling-derived catalog family. Supported:
/// BendingTimelike, BendingSpacelike, LightlikeRotational,
/// HelicoidalTimelike, HelicoidalSpacelikeI/II; the punctured chart only for
/// BendingSpacelike and the two spacelike helicoidal families. Throws
/// std::invalid_argument otherwise.
FormTriple forms_for(const CatalogSurface& s, Chart chart = Chart::Exp);

/// phi = alpha' + i V x alpha' on the exp chart.
FormTriple forms_from_bjorling(const BjorlingData& data);

/// (g, f) from the forms. Throws NumericalError when phi1 - i phi2 vanishes
/// at every probe point.
WeierstrassData weierstrass_pair(const FormTriple& t);

/// The forms rebuilt from (g, f).
Vec3C reconstruct_forms(const WeierstrassData& w, Complex z);

/// Lorentzian: N = (2 Re g, 2 Im g, 1 + |g|^2) / (1 - |g|^2) on H^2.
/// Euclidean: N = (2 Re g, 2 Im g, |g|^2 - 1) / (|g|^2 + 1) on S^2.
/// Throws NumericalError for Lorentzian data with ||g| - 1| <= tol.
Vec3R gauss_map(const WeierstrassData& w, Complex z, double tol = 1e-10);

/// Counterclockwise circle.
struct Loop {
  Complex center = 0.0;
  double radius = 1.0;
};

struct PeriodResult {
  Complex value;
  int nodes = 0;  // nodes of the accepted trapezoidal rule
};

/// Contour integral of phi_k dz over the loop (k = 1, 2, 3) by the
/// trapezoidal rule, doubling from `nodes` until two successive values
/// agree to tol * max(1, |value|). Requires a single-valued punctured
/// triple and a loop off the singularities (std::invalid_argument); throws
/// NumericalError when doubling does not converge.
PeriodResult period(const FormTriple& t, int k, const Loop& loop, int nodes = 32,
                    double tol = 1e-13);

FormTriple dualize(const FormTriple& t);
/// (-i psi1, -i psi2, psi3).
FormTriple undualize(const FormTriple& t);

/// Re Integral_{a}^{b} phi dz along the segment.
Vec3R integrate_forms(const FormTriple& t, Complex a, Complex b, const GaussLegendreRule& rule);

struct Annulus {
  double r_in = 0.0;  // 0 means the full disc
  double r_out = 1.0;
};

struct CurvatureGrid {
  int nr = 256;      // radial nodes, rounded up to whole 8-point panels
  int ntheta = 256;  // angular nodes
};

/// -4 Integral |g'|^2 / (1 + |g|^2)^2 dA over the annulus. The radial
/// variable is log r with composite Gauss-Legendre panels, the angle uses the
/// trapezoidal rule, and g' comes from a fourth-order central difference
/// (applied to 1/g where |g| > 1). Throws NumericalError on a non-finite
/// integrand.
double total_curvature(const WeierstrassData& w, Annulus annulus, CurvatureGrid grid = {},
                       kernels::Backend backend = kernels::Backend::OpenMP);

/// The derivative used inside total_curvature, exposed for testing.
Complex derivative(const ScalarMap& g, Complex z);

}  // namespace maxsurf
