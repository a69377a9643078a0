#include "maxsurf/weierstrass.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "maxsurf/error.hpp"

namespace maxsurf {

namespace {

constexpr Complex I{0.0, 1.0};

std::string format_z(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

bool is_integer(double a) { return std::isfinite(a) && a == std::round(a) && std::abs(a) < 1e6; }

Complex int_pow(Complex w, long n) {
  if (n < 0) return 1.0 / int_pow(w, -n);
  Complex result = 1.0;
  Complex base = w;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

// w^a: repeated products for integer a, principal branch otherwise.
ScalarMap power_map(double a) {
  if (is_integer(a)) {
    const long n = std::lround(a);
    return [n](Complex w) { return int_pow(w, n); };
  }
  return [a](Complex w) { return std::exp(a * std::log(w)); };
}

FormTriple make_triple(ScalarMap p1, ScalarMap p2, ScalarMap p3, Chart chart,
                       bool single_valued = true) {
  FormTriple t;
  t.phi[0] = std::move(p1);
  t.phi[1] = std::move(p2);
  t.phi[2] = std::move(p3);
  t.chart = chart;
  t.single_valued = single_valued;
  return t;
}

FormTriple bending_timelike(double a) {
  return make_triple(
      [a](Complex z) { return -std::sin(z) - I * std::cos(z) * std::cosh(a * z); },
      [a](Complex z) { return std::cos(z) - I * std::sin(z) * std::cosh(a * z); },
      [a](Complex z) { return I * std::sinh(a * z); }, Chart::Exp);
}

FormTriple bending_spacelike(double a) {
  return make_triple(
      [a](Complex z) { return -I * std::cosh(a * z); },
      [a](Complex z) { return std::cosh(z) - I * std::sinh(z) * std::sinh(a * z); },
      [a](Complex z) { return std::sinh(z) - I * std::cosh(z) * std::sinh(a * z); }, Chart::Exp);
}

FormTriple bending_spacelike_punctured(double a) {
  const ScalarMap pw = power_map(a);
  return make_triple(
      [pw](Complex w) {
        const Complex p = pw(w);
        return -I * (p * p + 1.0) / (2.0 * p * w);
      },
      [pw](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (-I * p * p * w2 + I * p * p + 2.0 * p * w2 + 2.0 * p + I * w2 - I) /
               (4.0 * p * w2);
      },
      [pw](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (-I * p * p * w2 - I * p * p + 2.0 * p * w2 - 2.0 * p + I * w2 + I) /
               (4.0 * p * w2);
      },
      Chart::Punctured, is_integer(a));
}

FormTriple lightlike_rotational(double a) {
  const double ch = std::cosh(a), sh = std::sinh(a);
  return make_triple(
      [ch, sh](Complex z) { return z + 0.5 * I * ((z * z - 2.0) * ch - z * z * sh); },
      [ch, sh](Complex z) { return 1.0 + I * z * (ch - sh); },
      [ch, sh](Complex z) { return z + 0.5 * I * (z * z * ch - (z * z + 2.0) * sh); },
      Chart::Exp);
}

FormTriple helicoidal_timelike(double a, double lam, double mu) {
  return make_triple(
      [a, lam, mu](Complex z) {
        return I * mu * std::cos(z) * std::cosh(a * z) -
               std::sin(z) * (1.0 + I * lam * std::sinh(a * z));
      },
      [a, lam, mu](Complex z) {
        return std::cos(z) * (1.0 + I * lam * std::sinh(a * z)) +
               I * mu * std::sin(z) * std::cosh(a * z);
      },
      [a, lam](Complex z) { return lam + I * std::sinh(a * z); }, Chart::Exp);
}

FormTriple helicoidal_spacelike_i(double a, double lam, double mu) {
  return make_triple(
      [a, lam](Complex z) { return lam + I * std::sinh(a * z); },
      [a, lam, mu](Complex z) {
        return std::sinh(z) +
               I * (lam * std::sinh(z) * std::sinh(a * z) - mu * std::cosh(z) * std::cosh(a * z));
      },
      [a, lam, mu](Complex z) {
        return std::cosh(z) +
               I * (lam * std::cosh(z) * std::sinh(a * z) - mu * std::sinh(z) * std::cosh(a * z));
      },
      Chart::Exp);
}

FormTriple helicoidal_spacelike_i_punctured(double a, double lam, double mu) {
  const ScalarMap pw = power_map(a);
  return make_triple(
      [pw, lam](Complex w) {
        const Complex p = pw(w);
        return (I * p * p + 2.0 * lam * p - I) / (2.0 * p * w);
      },
      [pw, lam, mu](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (I * (lam - mu) * (p * p * w2 + 1.0) - I * (lam + mu) * (p * p + w2) +
                2.0 * p * w2 - 2.0 * p) /
               (4.0 * p * w2);
      },
      [pw, lam, mu](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (I * (lam - mu) * (p * p * w2 - 1.0) + I * (lam + mu) * (p * p - w2) +
                2.0 * p * w2 + 2.0 * p) /
               (4.0 * p * w2);
      },
      Chart::Punctured, is_integer(a));
}

FormTriple helicoidal_spacelike_ii(double a, double lam, double mu) {
  return make_triple(
      [a, lam](Complex z) { return lam - I * std::cosh(a * z); },
      [a, lam, mu](Complex z) {
        return std::cosh(z) +
               I * (lam * std::cosh(z) * std::cosh(a * z) - mu * std::sinh(z) * std::sinh(a * z));
      },
      [a, lam, mu](Complex z) {
        return std::sinh(z) +
               I * (lam * std::sinh(z) * std::cosh(a * z) - mu * std::cosh(z) * std::sinh(a * z));
      },
      Chart::Exp);
}

FormTriple helicoidal_spacelike_ii_punctured(double a, double lam, double mu) {
  const ScalarMap pw = power_map(a);
  return make_triple(
      [pw, lam](Complex w) {
        const Complex p = pw(w);
        return (-I * p * p + 2.0 * lam * p - I) / (2.0 * p * w);
      },
      [pw, lam, mu](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (I * (lam - mu) * (p * p * w2 + 1.0) + I * (lam + mu) * (p * p + w2) +
                2.0 * p * w2 + 2.0 * p) /
               (4.0 * p * w2);
      },
      [pw, lam, mu](Complex w) {
        const Complex p = pw(w), w2 = w * w;
        return (I * (lam - mu) * (p * p * w2 - 1.0) - I * (lam + mu) * (p * p - w2) +
                2.0 * p * w2 - 2.0 * p) /
               (4.0 * p * w2);
      },
      Chart::Punctured, is_integer(a));
}

[[noreturn]] void unsupported(const CatalogSurface& s, Chart chart) {
  throw std::invalid_argument(std::string("no ") + to_string(chart) + "-chart forms for " +
                              s.label());
}

}  // namespace

const char* to_string(Chart c) { return c == Chart::Exp ? "exp" : "punctured"; }

const char* to_string(Signature s) {
  return s == Signature::Lorentzian ? "lorentzian" : "euclidean";
}

Complex null_form(const FormTriple& t, Complex z) {
  const Vec3C p = t(z);
  const Complex s = p.x * p.x + p.y * p.y;
  return t.signature == Signature::Lorentzian ? s - p.z * p.z : s + p.z * p.z;
}

FormTriple forms_for(const CatalogSurface& s, Chart chart) {
  const double a = s.a(), lam = s.lambda(), mu = s.mu();
  if (chart == Chart::Punctured) {
    switch (s.id()) {
      case SurfaceId::BendingSpacelike: return bending_spacelike_punctured(a);
      case SurfaceId::HelicoidalSpacelikeI: return helicoidal_spacelike_i_punctured(a, lam, mu);
      case SurfaceId::HelicoidalSpacelikeII: return helicoidal_spacelike_ii_punctured(a, lam, mu);
      default: unsupported(s, chart);
    }
  }
  switch (s.id()) {
    case SurfaceId::BendingTimelike: return bending_timelike(a);
    case SurfaceId::BendingSpacelike: return bending_spacelike(a);
    case SurfaceId::LightlikeRotational: return lightlike_rotational(a);
    case SurfaceId::HelicoidalTimelike: return helicoidal_timelike(a, lam, mu);
    case SurfaceId::HelicoidalSpacelikeI: return helicoidal_spacelike_i(a, lam, mu);
    case SurfaceId::HelicoidalSpacelikeII: return helicoidal_spacelike_ii(a, lam, mu);
    default: unsupported(s, chart);
  }
}

FormTriple forms_from_bjorling(const BjorlingData& data) {
  auto component = [data](int k) -> ScalarMap {
    return [data, k](Complex z) {
      const Vec3C d = data.alpha.tangent(z);
      const Vec3C phi = d + I * lorentz_cross(data.normal(z), d);
      return k == 0 ? phi.x : (k == 1 ? phi.y : phi.z);
    };
  };
  return make_triple(component(0), component(1), component(2), Chart::Exp);
}

WeierstrassData weierstrass_pair(const FormTriple& t) {
  const ScalarMap p1 = t.phi[0], p2 = t.phi[1], p3 = t.phi[2];
  ScalarMap f = [p1, p2](Complex z) { return p1(z) - I * p2(z); };

  const Complex probes[] = {{0.31, 0.17}, {-0.52, 0.71}, {0.93, -0.44}, {1.7, 1.1}};
  bool degenerate = true;
  for (Complex z : probes) {
    const Complex fz = f(z);
    if (std::isfinite(std::abs(fz)) && std::abs(fz) > 1e-14 * (1.0 + std::abs(p1(z)))) {
      degenerate = false;
      break;
    }
  }
  if (degenerate) throw NumericalError("degenerate form triple: phi1 - i phi2 vanishes identically");

  WeierstrassData w;
  w.g = [p3, f](Complex z) { return p3(z) / f(z); };
  w.f = std::move(f);
  w.chart = t.chart;
  w.signature = t.signature;
  if (t.chart == Chart::Punctured) w.singularities.push_back(0.0);
  return w;
}

Vec3C reconstruct_forms(const WeierstrassData& w, Complex z) {
  const Complex g = w.g(z), f = w.f(z), g2 = g * g;
  if (w.signature == Signature::Lorentzian)
    return {0.5 * (1.0 + g2) * f, 0.5 * I * (1.0 - g2) * f, g * f};
  return {0.5 * (1.0 - g2) * f, 0.5 * I * (1.0 + g2) * f, g * f};
}

Vec3R gauss_map(const WeierstrassData& w, Complex z, double tol) {
  const Complex g = w.g(z);
  const double m = std::norm(g);
  if (!std::isfinite(m)) throw NumericalError("Gauss map undefined at z = " + format_z(z));
  if (w.signature == Signature::Euclidean)
    return Vec3R{2.0 * g.real(), 2.0 * g.imag(), m - 1.0} / (m + 1.0);
  if (std::abs(std::sqrt(m) - 1.0) <= tol)
    throw NumericalError("degenerate Gauss map (|g| = 1) at z = " + format_z(z));
  return Vec3R{2.0 * g.real(), 2.0 * g.imag(), 1.0 + m} / (1.0 - m);
}

PeriodResult period(const FormTriple& t, int k, const Loop& loop, int nodes, double tol) {
  if (k < 1 || k > 3) throw std::invalid_argument("period: form index must be 1, 2 or 3");
  if (t.chart != Chart::Punctured)
    throw std::invalid_argument("period: loops are taken on the punctured chart");
  if (!t.single_valued)
    throw std::invalid_argument("period: forms with a non-integer exponent are multivalued");
  if (!(loop.radius > 0.0) || !std::isfinite(loop.radius))
    throw std::invalid_argument("period: loop radius must be positive");
  if (std::abs(std::abs(loop.center) - loop.radius) < 1e-12 * loop.radius)
    throw std::invalid_argument("period: loop passes through the puncture");
  if (nodes < 4) throw std::invalid_argument("period: at least 4 nodes are required");

  const ScalarMap& phi = t.phi[k - 1];
  auto trapezoid = [&](int n) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
      acc += phi(loop.center + loop.radius * e) * e;
    }
    return acc * I * loop.radius * (2.0 * std::numbers::pi / n);
  };

  constexpr int kMaxNodes = 1 << 20;
  Complex prev = trapezoid(nodes);
  for (int n = 2 * nodes; n <= kMaxNodes; n *= 2) {
    const Complex cur = trapezoid(n);
    if (!std::isfinite(std::abs(cur)))
      throw NumericalError("period: integrand is not finite on the loop");
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return {cur, n};
    prev = cur;
  }
  throw NumericalError("period: trapezoidal rule did not converge");
}

FormTriple dualize(const FormTriple& t) {
  FormTriple d = t;
  const ScalarMap p1 = t.phi[0], p2 = t.phi[1];
  d.phi[0] = [p1](Complex z) { return I * p1(z); };
  d.phi[1] = [p2](Complex z) { return I * p2(z); };
  d.signature = Signature::Euclidean;
  return d;
}

FormTriple undualize(const FormTriple& t) {
  FormTriple d = t;
  const ScalarMap p1 = t.phi[0], p2 = t.phi[1];
  d.phi[0] = [p1](Complex z) { return -I * p1(z); };
  d.phi[1] = [p2](Complex z) { return -I * p2(z); };
  d.signature = Signature::Lorentzian;
  return d;
}

Vec3R integrate_forms(const FormTriple& t, Complex a, Complex b, const GaussLegendreRule& rule) {
  const AnalyticMap f = [&t](Complex z) { return t(z); };
  return real_part(integrate_segment(f, a, b, rule));
}

Complex derivative(const ScalarMap& g, Complex z) {
  const double h = 1e-3 * std::max(1.0, std::abs(z));
  return (-g(z + 2.0 * h) + 8.0 * g(z + h) - 8.0 * g(z - h) + g(z - 2.0 * h)) / (12.0 * h);
}

double total_curvature(const WeierstrassData& w, Annulus annulus, CurvatureGrid grid,
                       kernels::Backend backend) {
  if (!(annulus.r_in >= 0.0) || !(annulus.r_out > annulus.r_in) || !std::isfinite(annulus.r_out))
    throw std::invalid_argument("total_curvature: need 0 <= r_in < r_out < inf");
  if (grid.nr < 1 || grid.ntheta < 4)
    throw std::invalid_argument("total_curvature: need nr >= 1 and ntheta >= 4");

  constexpr int kPanel = 8;
  const GaussLegendreRule rule = gauss_legendre(kPanel);

  // Radial nodes with weights that already include the area element r dr.
  std::vector<double> radius, weight;
  double r_log = annulus.r_in;
  if (annulus.r_in == 0.0) {
    const double r_disc = std::min(1e-3, 0.5 * annulus.r_out);
    for (int q = 0; q < kPanel; ++q) {
      const double r = 0.5 * r_disc * (rule.nodes[q] + 1.0);
      radius.push_back(r);
      weight.push_back(0.5 * r_disc * rule.weights[q] * r);
    }
    r_log = r_disc;
  }
  const int panels = (grid.nr + kPanel - 1) / kPanel;
  const double s0 = std::log(r_log), ds = (std::log(annulus.r_out) - s0) / panels;
  for (int p = 0; p < panels; ++p) {
    for (int q = 0; q < kPanel; ++q) {
      const double s = s0 + ds * (p + 0.5 * (rule.nodes[q] + 1.0));
      const double r = std::exp(s);
      radius.push_back(r);
      weight.push_back(0.5 * ds * rule.weights[q] * r * r);
    }
  }

  const ScalarMap& g = w.g;
  const ScalarMap inv_g = [&g](Complex z) { return 1.0 / g(z); };
  auto density = [&](Complex z) {
    const Complex gz = g(z);
    const bool flip = std::abs(gz) > 1.0;
    const Complex d = derivative(flip ? inv_g : g, z);
    const double m = flip ? 1.0 / std::norm(gz) : std::norm(gz);
    const double value = std::norm(d) / ((1.0 + m) * (1.0 + m));
    if (!std::isfinite(value))
      throw NumericalError("total_curvature: integrand is not finite at z = " + format_z(z));
    return value;
  };

  const int nt = grid.ntheta;
  const double dtheta = 2.0 * std::numbers::pi / nt;
  const std::vector<double> rows = kernels::map_index<double>(
      static_cast<int>(radius.size()),
      [&](int i) {
        double acc = 0.0;
        for (int j = 0; j < nt; ++j) acc += density(std::polar(radius[i], j * dtheta));
        return acc * dtheta * weight[i];
      },
      backend);

  double total = 0.0;
  for (double r : rows) total += r;
  return -4.0 * total;
}

}  // namespace maxsurf
