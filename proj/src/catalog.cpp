#include "maxsurf/catalog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace maxsurf {

namespace {

constexpr std::array<std::pair<SurfaceId, const char*>, 10> kNames{{
    {SurfaceId::BendingTimelike, "BendingTimelike"},
    {SurfaceId::BendingSpacelike, "BendingSpacelike"},
    {SurfaceId::LightlikeRotational, "LightlikeRotational"},
    {SurfaceId::HelicoidalTimelike, "HelicoidalTimelike"},
    {SurfaceId::HelicoidalSpacelikeI, "HelicoidalSpacelikeI"},
    {SurfaceId::HelicoidalSpacelikeII, "HelicoidalSpacelikeII"},
    {SurfaceId::EllipticCatenoid, "EllipticCatenoid"},
    {SurfaceId::HyperbolicCatenoid, "HyperbolicCatenoid"},
    {SurfaceId::HelicoidTimelikeConst, "HelicoidTimelikeConst"},
    {SurfaceId::EnneperSecondKind, "EnneperSecondKind"},
}};

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool needs_linear_twist(SurfaceId id) {
  switch (id) {
    case SurfaceId::BendingTimelike:
    case SurfaceId::BendingSpacelike:
    case SurfaceId::HelicoidalTimelike:
    case SurfaceId::HelicoidalSpacelikeI:
    case SurfaceId::HelicoidalSpacelikeII:
      return true;
    default:
      return false;
  }
}

std::optional<CurveKind> helix_of(SurfaceId id) {
  switch (id) {
    case SurfaceId::HelicoidalTimelike:
    case SurfaceId::HelicoidTimelikeConst:
      return CurveKind::HelixTimelike;
    case SurfaceId::HelicoidalSpacelikeI:
      return CurveKind::HelixSpacelikeI;
    case SurfaceId::HelicoidalSpacelikeII:
      return CurveKind::HelixSpacelikeII;
    default:
      return std::nullopt;
  }
}

// sin(e v) / e, continuous through e = 0.
double sin_ratio(double e, double v) {
  const double x = e * v;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return v * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0));
  }
  return std::sin(x) / e;
}

enum class Band { Unit, Compensated, General };

Band band_for(double a) {
  const double e = std::abs(a - 1.0);
  if (e < 1e-6) return Band::Unit;
  if (e < 1e-3) return Band::Compensated;
  return Band::General;
}

// Timelike-axis circle, phi = a t.
Vec3R bending_timelike(double a, double u, double v) {
  const double d = a * a + 1.0;
  const double cu = std::cos(u), su = std::sin(u);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double chv = std::cosh(v), shv = std::sinh(v);
  const double x = (a * cu * sav * chau * chv - a * su * cav * shau * shv +
                    cu * cav * chau * shv + su * sav * shau * chv) /
                       d +
                   cu * chv;
  const double y = (a * cu * cav * shau * shv + a * su * sav * chau * chv +
                    su * cav * chau * shv - cu * sav * shau * chv) /
                       d +
                   su * chv;
  const double z = -sav * shau / a;
  return {x, y, z};
}

// Lightlike-axis circle, constant phi = a.
Vec3R lightlike_rotational(double a, double u, double v) {
  const double k = std::sinh(a) - std::cosh(a);
  const double cubic = k * (0.5 * u * u * v - v * v * v / 6.0);
  const double quad = 0.5 * u * u - 0.5 * v * v;
  return {cubic + v * std::cosh(a) + quad - 1.0, u + k * u * v, cubic + v * std::sinh(a) + quad};
}

// Timelike helix, phi = a t.
Vec3R helicoidal_timelike(double a, double l, double m, double u, double v) {
  const double d = a * a + 1.0;
  const double cu = std::cos(u), su = std::sin(u);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double chv = std::cosh(v), shv = std::sinh(v);
  const double p = m - a * l;  // (mu - a lambda)
  const double q = a * m + l;  // (a mu + lambda)
  const double x = chv * (d * cu - p * su * shau * sav - q * cu * chau * sav) / d +
                   shv * cav * (q * su * shau - p * cu * chau) / d;
  const double y = chv * (d * su - q * su * chau * sav + p * cu * shau * sav) / d -
                   shv * cav * (q * cu * shau + p * su * chau) / d;
  const double z = l * u - shau * sav / a;
  return {x, y, z};
}

// Rotational surface about the timelike axis, phi = a. The z sign is the
// one the Björling integral produces (the mirror image belongs to phi = -a).
Vec3R elliptic_catenoid(double a, double u, double v) {
  const double r = std::cosh(a) * std::sinh(v) + std::cosh(v);
  return {std::cos(u) * r, std::sin(u) * r, -v * std::sinh(a)};
}

Vec3R hyperbolic_catenoid(double a, double u, double v) {
  const double sa = std::sinh(a);
  return {v * std::cosh(a), sa * std::sinh(u) * std::sin(v) + std::sinh(u) * std::cos(v),
          sa * std::cosh(u) * std::sin(v) + std::cosh(u) * std::cos(v)};
}

Vec3R helicoid_timelike_const(double a, double l, double m, double u, double v) {
  const double ca = std::cosh(a), sa = std::sinh(a);
  const double cu = std::cos(u), su = std::sin(u);
  const double chv = std::cosh(v), shv = std::sinh(v);
  return {-m * ca * cu * shv + l * sa * su * shv + cu * chv,
          chv * su - m * ca * su * shv - l * sa * cu * shv, l * u - v * sa};
}

}  // namespace

const char* to_string(SurfaceId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<SurfaceId> surface_id_from_string(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

const std::vector<SurfaceId>& all_surface_ids() {
  static const std::vector<SurfaceId> ids = [] {
    std::vector<SurfaceId> out;
    for (const auto& entry : kNames) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

GeneratingCurve GeneratingCurve::for_lightlike_circle(double a) {
  const double mu = -(std::cosh(a) - 2.0 * std::sinh(a)) * (std::sinh(a) + std::cosh(a)) / 3.0;
  return {8.0 * mu + 4.0, mu};
}

CatalogSurface CatalogSurface::make(SurfaceId id, double a, double lambda) {
  if (id == SurfaceId::EnneperSecondKind) {
    throw std::invalid_argument("EnneperSecondKind is built from a generating curve");
  }
  if (!std::isfinite(a)) throw std::invalid_argument(std::string(to_string(id)) + ": a must be finite");
  if (needs_linear_twist(id) && !(a > 0.0)) {
    throw std::invalid_argument(std::string(to_string(id)) + " requires a > 0");
  }
  CatalogSurface s;
  s.id_ = id;
  s.a_ = a;
  if (const auto kind = helix_of(id)) {
    const CurveFamily helix = CurveFamily::helix(*kind, lambda);
    s.lambda_ = helix.lambda();
    s.mu_ = helix.mu();
  }
  return s;
}

CatalogSurface CatalogSurface::enneper_second_kind(const GeneratingCurve& g) {
  if (!std::isfinite(g.lambda) || !std::isfinite(g.mu) || !(g.lambda > 0.0)) {
    throw std::invalid_argument("EnneperSecondKind requires finite mu and lambda > 0");
  }
  CatalogSurface s;
  s.id_ = SurfaceId::EnneperSecondKind;
  s.generating_ = g;
  return s;
}

std::string CatalogSurface::label() const {
  std::string out = to_string(id_);
  if (id_ == SurfaceId::EnneperSecondKind) {
    return out + "(lambda=" + shortest(generating_.lambda) + ",mu=" + shortest(generating_.mu) + ")";
  }
  out += "(a=" + shortest(a_);
  if (helix_of(id_)) out += ",lambda=" + shortest(lambda_);
  return out + ")";
}

namespace formulas {

// Spacelike-axis circle, phi = a t, a != 1.
Vec3R bending_spacelike_general(double a, double u, double v) {
  const double d = a * a - 1.0;
  const double cv = std::cos(v), sv = std::sin(v);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double x = chau * sav / a;
  const double y = -sv * cav * shu * shau / d + a * sav * cv * shu * shau / d +
                   a * sv * cav * chu * chau / d - cv * sav * chu * chau / d + shu * cv;
  const double z = a * cv * sav * chu * shau / d - sv * cav * chu * shau / d +
                   a * sv * cav * shu * chau / d - cv * sav * shu * chau / d + cv * chu;
  return {x, y, z};
}

// The same at a = 1.
Vec3R bending_spacelike_unit(double u, double v) {
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double cv = std::cos(v), sv = std::sin(v);
  return {chu * sv, shu * cv + 0.5 * sv * cv * (shu * shu + chu * chu) - 0.5 * v,
          chu * cv * (1.0 + shu * sv)};
}

// The general spacelike bending formula with each (a^2 - 1)-fraction pair regrouped as
//   (a cos v sin av - sin v cos av) / (a^2 - 1) = (cos v sin av + sin((a-1)v)/(a-1)) / (a+1)
//   (a sin v cos av - cos v sin av) / (a^2 - 1) = (sin v cos av - sin((a-1)v)/(a-1)) / (a+1)
Vec3R bending_spacelike_compensated(double a, double u, double v) {
  const double cv = std::cos(v), sv = std::sin(v);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double s = sin_ratio(a - 1.0, v);
  const double k1 = (cv * sav + s) / (a + 1.0);
  const double k2 = (sv * cav - s) / (a + 1.0);
  return {chau * sav / a, shu * shau * k1 + chu * chau * k2 + shu * cv,
          chu * shau * k1 + shu * chau * k2 + cv * chu};
}

// Spacelike helix of the first kind, a != 1.
Vec3R helicoidal_spacelike_i_general(double a, double l, double u, double v) {
  const double m = std::sqrt(l * l - 1.0);
  const double d = a * a - 1.0;
  const double p = a * m + l, q = a * l + m;
  const double cv = std::cos(v), sv = std::sin(v);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double inner = p * cv * sav - q * sv * cav;
  const double outer = p * sv * cav - q * cv * sav;
  return {l * u - shau * sav / a, chu * (d * cv + chau * inner) / d + shu * shau * outer / d,
          shu * (d * cv + chau * inner) / d + chu * shau * outer / d};
}

// The same at a = 1.
Vec3R helicoidal_spacelike_i_unit(double l, double u, double v) {
  const double m = std::sqrt(l * l - 1.0);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double cv = std::cos(v), sv = std::sin(v);
  return {l * u - shu * sv,
          0.5 * ((m - l) * (shu * shu + chu * chu) * sv * cv + 2.0 * chu * cv + (m + l) * v),
          shu * cv * ((m - l) * chu * sv + 1.0)};
}

namespace {

// (p cos v sin av - q sin v cos av) / (a^2 - 1) and the swapped pair, with
// p = a mu + lambda, q = a lambda + mu, in a form without the 0/0 at a = 1.
std::pair<double, double> helix_fractions(double a, double l, double m, double v) {
  const double c1 = std::cos(v) * std::sin(a * v);
  const double c2 = std::sin(v) * std::cos(a * v);
  const double s = sin_ratio(a - 1.0, v);
  return {((m + l) * s + m * c1 - l * c2) / (a + 1.0), (-(m + l) * s + m * c2 - l * c1) / (a + 1.0)};
}

}  // namespace

Vec3R helicoidal_spacelike_i_compensated(double a, double l, double u, double v) {
  const double m = std::sqrt(l * l - 1.0);
  const auto [l1, l2] = helix_fractions(a, l, m, v);
  const double cv = std::cos(v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  return {l * u - shau * std::sin(a * v) / a, chu * cv + chu * chau * l1 + shu * shau * l2,
          shu * cv + shu * chau * l1 + chu * shau * l2};
}

// Spacelike helix of the second kind, a != 1.
Vec3R helicoidal_spacelike_ii_general(double a, double l, double u, double v) {
  const double m = std::sqrt(l * l + 1.0);
  const double d = a * a - 1.0;
  const double p = a * m + l, q = a * l + m;
  const double cv = std::cos(v), sv = std::sin(v);
  const double cav = std::cos(a * v), sav = std::sin(a * v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  const double inner = p * cv * sav - q * sv * cav;
  const double outer = p * sv * cav - q * cv * sav;
  return {chau * sav / a + l * u, shu * (d * cv + shau * inner) / d + chu * chau * outer / d,
          chu * (d * cv + shau * inner) / d + shu * chau * outer / d};
}

// The same at a = 1.
Vec3R helicoidal_spacelike_ii_unit(double l, double u, double v) {
  const double m = std::sqrt(l * l + 1.0);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double cv = std::cos(v), sv = std::sin(v);
  return {l * u + chu * sv,
          0.5 * ((m - l) * (shu * shu + chu * chu) * sv * cv + 2.0 * shu * cv - (m + l) * v),
          chu * cv * ((m - l) * shu * sv + 1.0)};
}

Vec3R helicoidal_spacelike_ii_compensated(double a, double l, double u, double v) {
  const double m = std::sqrt(l * l + 1.0);
  const auto [l1, l2] = helix_fractions(a, l, m, v);
  const double cv = std::cos(v);
  const double chu = std::cosh(u), shu = std::sinh(u);
  const double chau = std::cosh(a * u), shau = std::sinh(a * u);
  return {chau * std::sin(a * v) / a + l * u, shu * cv + shu * shau * l1 + chu * chau * l2,
          chu * cv + chu * shau * l1 + shu * chau * l2};
}

}  // namespace formulas

Vec3R eval_surface(const CatalogSurface& s, double u, double v) {
  const double a = s.a();
  const double l = s.lambda();
  switch (s.id()) {
    case SurfaceId::BendingTimelike:
      return bending_timelike(a, u, v);
    case SurfaceId::BendingSpacelike:
      switch (band_for(a)) {
        case Band::Unit:
          return formulas::bending_spacelike_unit(u, v);
        case Band::Compensated:
          return formulas::bending_spacelike_compensated(a, u, v);
        case Band::General:
          return formulas::bending_spacelike_general(a, u, v);
      }
      break;
    case SurfaceId::LightlikeRotational:
      return lightlike_rotational(a, u, v);
    case SurfaceId::HelicoidalTimelike:
      return helicoidal_timelike(a, l, s.mu(), u, v);
    case SurfaceId::HelicoidalSpacelikeI:
      switch (band_for(a)) {
        case Band::Unit:
          return formulas::helicoidal_spacelike_i_unit(l, u, v);
        case Band::Compensated:
          return formulas::helicoidal_spacelike_i_compensated(a, l, u, v);
        case Band::General:
          return formulas::helicoidal_spacelike_i_general(a, l, u, v);
      }
      break;
    case SurfaceId::HelicoidalSpacelikeII:
      switch (band_for(a)) {
        case Band::Unit:
          return formulas::helicoidal_spacelike_ii_unit(l, u, v);
        case Band::Compensated:
          return formulas::helicoidal_spacelike_ii_compensated(a, l, u, v);
        case Band::General:
          return formulas::helicoidal_spacelike_ii_general(a, l, u, v);
      }
      break;
    case SurfaceId::EllipticCatenoid:
      return elliptic_catenoid(a, u, v);
    case SurfaceId::HyperbolicCatenoid:
      return hyperbolic_catenoid(a, u, v);
    case SurfaceId::HelicoidTimelikeConst:
      return helicoid_timelike_const(a, l, s.mu(), u, v);
    case SurfaceId::EnneperSecondKind:
      return eval_enneper_orbit(s.generating(), u, v);
  }
  throw std::logic_error("eval_surface: unhandled surface id");
}

SurfacePatch make_patch(const CatalogSurface& s, Rect domain) {
  SurfacePatch p;
  p.eval = [s](double u, double v) { return eval_surface(s, u, v); };
  p.domain = domain;
  p.family = s.label();
  return p;
}

std::optional<BjorlingSource> bjorling_source(const CatalogSurface& s) {
  const double a = s.a();
  switch (s.id()) {
    case SurfaceId::BendingTimelike:
      return BjorlingSource{CurveFamily::circle(CurveKind::CircleTimelike), NormalFieldSpec::linear(a)};
    case SurfaceId::BendingSpacelike:
      return BjorlingSource{CurveFamily::circle(CurveKind::CircleSpacelike), NormalFieldSpec::linear(a)};
    case SurfaceId::LightlikeRotational:
      return BjorlingSource{CurveFamily::circle(CurveKind::CircleLightlike), NormalFieldSpec::constant(a)};
    case SurfaceId::EllipticCatenoid:
      return BjorlingSource{CurveFamily::circle(CurveKind::CircleTimelike), NormalFieldSpec::constant(a)};
    case SurfaceId::HyperbolicCatenoid:
      return BjorlingSource{CurveFamily::circle(CurveKind::CircleSpacelike), NormalFieldSpec::constant(a)};
    case SurfaceId::HelicoidalTimelike:
      return BjorlingSource{CurveFamily::helix(CurveKind::HelixTimelike, s.lambda()), NormalFieldSpec::linear(a)};
    case SurfaceId::HelicoidalSpacelikeI:
      return BjorlingSource{CurveFamily::helix(CurveKind::HelixSpacelikeI, s.lambda()), NormalFieldSpec::linear(a)};
    case SurfaceId::HelicoidalSpacelikeII:
      return BjorlingSource{CurveFamily::helix(CurveKind::HelixSpacelikeII, s.lambda()), NormalFieldSpec::linear(a)};
    case SurfaceId::HelicoidTimelikeConst:
      return BjorlingSource{CurveFamily::helix(CurveKind::HelixTimelike, s.lambda()), NormalFieldSpec::constant(a)};
    case SurfaceId::EnneperSecondKind:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<MotionGroup> symmetry_group(const CatalogSurface& s) {
  switch (s.id()) {
    case SurfaceId::EllipticCatenoid:
      return MotionGroup::rot_timelike();
    case SurfaceId::HyperbolicCatenoid:
      return MotionGroup::rot_spacelike();
    case SurfaceId::LightlikeRotational:
    case SurfaceId::EnneperSecondKind:
      return MotionGroup::rot_lightlike();
    case SurfaceId::HelicoidTimelikeConst:
      return MotionGroup::screw_timelike(s.lambda());
    default:
      return std::nullopt;
  }
}

Vec3R eval_generating_curve(const GeneratingCurve& g, double v) {
  const double h = g.lambda * v * v * v + g.mu;
  return {h + v, 0.0, h - v};
}

double ode_residual(const GeneratingCurve& g, double c, double b, double v) {
  if (!(c > 0.0)) throw std::invalid_argument("ode_residual: c must be positive");
  const Vec3R p = eval_generating_curve(g, v);
  const double s = p.x, f = p.z;
  const double d = s - f;
  return std::abs(c * d * d * d + d - 2.0 * s - b);
}

Vec3R eval_enneper_orbit(const GeneratingCurve& g, double u, double v) {
  return MotionGroup::rot_lightlike().at(u).apply(eval_generating_curve(g, v));
}

double lightlike_identification_check(double a, double u) {
  const GeneratingCurve g = GeneratingCurve::for_lightlike_circle(a);
  const Vec3R z = eval_enneper_orbit(g, u, -0.5);
  const Vec3R alpha = real_part(make_curve(CurveFamily::circle(CurveKind::CircleLightlike)).position(u));
  return euclid_norm(z - alpha);
}

}  // namespace maxsurf
