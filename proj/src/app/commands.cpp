#include "maxsurf/app/commands.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

#include "maxsurf/app/report.hpp"
#include "maxsurf/error.hpp"

namespace maxsurf::app {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive_integer(double a) { return a >= 1.0 && a == std::round(a) && a < 64.0; }

// Deterministic sample points z = u + iv in the grid rectangle.
std::vector<Complex> sample_points(const Rect& r, int n) {
  std::mt19937_64 rng(0x6d617873u);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> zs;
  zs.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u = r.u_min + (r.u_max - r.u_min) * unit();
    const double v = r.v_min + (r.v_max - r.v_min) * unit();
    zs.emplace_back(u, v);
  }
  return zs;
}

double cnorm1(const Vec3C& p) { return std::abs(p.x) + std::abs(p.y) + std::abs(p.z); }

// Scale-relative residuals so large parameter domains do not inflate them.
double null_residual(const FormTriple& t, Complex z) {
  const Vec3C p = t(z);
  return std::abs(null_form(t, z)) / (1.0 + std::norm(p.x) + std::norm(p.y) + std::norm(p.z));
}

double reconstruction_residual(const FormTriple& t, const WeierstrassData& w, Complex z) {
  const Vec3C p = t(z);
  return cnorm1(p - reconstruct_forms(w, z)) / (1.0 + cnorm1(p));
}

Check failed_check(const std::string& name, const std::exception& e) {
  Check c = make_check(name, std::numeric_limits<double>::quiet_NaN(), 0.0);
  c.note = e.what();
  return c;
}

template <class F>
void guarded(VerificationReport& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const NumericalError& e) {
    r.add(failed_check(name, e));
  } catch (const std::invalid_argument& e) {
    r.add(failed_check(name, e));
  }
}

void weierstrass_checks(VerificationReport& r, const JobConfig& cfg, const CatalogSurface& s,
                        const std::optional<BjorlingData>& data) {
  const Tolerances& tol = cfg.tolerances;
  const std::vector<Complex> zs = sample_points(cfg.grid.rect, 100);

  FormTriple t;
  try {
    t = forms_for(s);
  } catch (const std::invalid_argument&) {
    r.skipped.push_back("weierstrass: no printed forms for " + s.label());
    return;
  }
  guarded(r, "weierstrass.null_condition", [&] {
    double worst = 0.0;
    for (Complex z : zs) worst = std::max(worst, null_residual(t, z));
    Check c = make_check("weierstrass.null_condition", worst, tol.null_condition);
    c.details.emplace_back("points", zs.size());
    r.add(std::move(c));
  });
  guarded(r, "weierstrass.reconstruction", [&] {
    const WeierstrassData w = weierstrass_pair(t);
    double worst = 0.0;
    for (Complex z : zs) worst = std::max(worst, reconstruction_residual(t, w, z));
    r.add(make_check("weierstrass.reconstruction", worst, tol.reconstruction));
  });
  if (data) {
    guarded(r, "weierstrass.bjorling_identity", [&] {
      const FormTriple b = forms_from_bjorling(*data);
      double worst = 0.0;
      for (Complex z : zs) worst = std::max(worst, cnorm1(t(z) - b(z)) / (1.0 + cnorm1(t(z))));
      r.add(make_check("weierstrass.bjorling_identity", worst, tol.bjorling_identity));
    });
  }

  FormTriple p;
  try {
    p = forms_for(s, Chart::Punctured);
  } catch (const std::invalid_argument&) {
    return;
  }
  guarded(r, "weierstrass.punctured_null_condition", [&] {
    double worst = 0.0;
    for (Complex z : zs) worst = std::max(worst, null_residual(p, std::exp(z)));
    r.add(make_check("weierstrass.punctured_null_condition", worst, tol.null_condition));
  });
  guarded(r, "weierstrass.punctured_reconstruction", [&] {
    const WeierstrassData w = weierstrass_pair(p);
    double worst = 0.0;
    for (Complex z : zs) worst = std::max(worst, reconstruction_residual(p, w, std::exp(z)));
    r.add(make_check("weierstrass.punctured_reconstruction", worst, tol.reconstruction));
  });
  guarded(r, "weierstrass.chart_coherence", [&] {
    double worst = 0.0;
    for (Complex z : zs) {
      const Complex w = std::exp(z);
      const Vec3C pe = t(z), pp = p(w) * w;
      worst = std::max(worst, cnorm1(pe - pp) / (1.0 + cnorm1(pe)));
    }
    r.add(make_check("weierstrass.chart_coherence", worst, tol.reconstruction));
  });
}

void period_checks(VerificationReport& r, const JobConfig& cfg, const CatalogSurface& s) {
  const std::optional<Vec3R> expected = expected_real_periods(s);
  if (!expected) {
    r.skipped.push_back("periods: need a punctured chart with integer a >= 1 (" + s.label() + ")");
    return;
  }
  const FormTriple t = forms_for(s, Chart::Punctured);
  const double exp_re[3] = {expected->x, expected->y, expected->z};
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "period.phi" + std::to_string(k);
    guarded(r, name, [&] {
      const PeriodResult pr = period(t, k, Loop{0.0, 1.0});
      const double want = exp_re[k - 1];
      const double tolerance =
          want == 0.0 ? cfg.tolerances.period_vanishing : cfg.tolerances.period;
      Check c = make_check(name, std::abs(pr.value.real() - want), tolerance);
      c.details = {{"re", pr.value.real()},
                   {"im", pr.value.imag()},
                   {"expected_re", want},
                   {"nodes", pr.nodes}};
      r.add(std::move(c));
    });
  }
}

void curvature_check(VerificationReport& r, const JobConfig& cfg, const CatalogSurface& s) {
  std::optional<CurvatureOracle> oracle = dual_curvature_oracle(s);
  if (!oracle) {
    r.skipped.push_back("curvature: no finite total curvature for the dual of " + s.label());
    return;
  }
  if (cfg.verify.annulus) oracle->annulus = *cfg.verify.annulus;
  guarded(r, "curvature.dual_total", [&] {
    const double value = total_curvature(oracle->data, oracle->annulus, cfg.verify.curvature_grid);
    Check c = make_check("curvature.dual_total", std::abs(value - oracle->expected) /
                                                     std::abs(oracle->expected),
                         cfg.tolerances.curvature_relative);
    c.details = {{"totalCurvatureDual", value},
                 {"expected", oracle->expected},
                 {"r_in", oracle->annulus.r_in},
                 {"r_out", oracle->annulus.r_out},
                 {"nr", cfg.verify.curvature_grid.nr},
                 {"ntheta", cfg.verify.curvature_grid.ntheta}};
    r.add(std::move(c));
  });
}

}  // namespace

SurfacePatch catalog_patch(const JobConfig& cfg) {
  SurfacePatch p = make_patch(make_surface(cfg.family), cfg.grid.rect);
  if (const double eps = cfg.catalog_perturbation; eps != 0.0) {
    p.eval = [base = p.eval, eps](double u, double v) {
      return base(u, v) + eps * Vec3R{u * v, 0.0, u * u * v};
    };
    p.du.reset();
    p.dv.reset();
  }
  return p;
}

SurfacePatch subject_patch(const JobConfig& cfg) {
  if (cfg.source == Source::Catalog) return catalog_patch(cfg);
  const auto src = bjorling_source(make_surface(cfg.family));
  if (!src) throw ConfigError("family has no Björling data");
  const BjorlingData data = make_bjorling_data(src->curve, src->normal, cfg.u0);
  return solve_bjorling(data, cfg.quadrature, cfg.grid.rect);
}

MeshOutput sample_mesh(const JobConfig& cfg) {
  const SurfacePatch p = subject_patch(cfg);
  MeshOutput m;
  m.grid = cfg.grid;
  m.label = p.family;
  m.vertices = kernels::sample(p, cfg.grid);
  m.spacelike = spacelike_region(p, cfg.grid, kBranchTolerance, cfg.tolerances.fd_step);
  return m;
}

std::optional<Vec3R> expected_real_periods(const CatalogSurface& s) {
  if (!positive_integer(s.a())) return std::nullopt;
  const bool one = s.a() == 1.0;
  switch (s.id()) {
    // residue i/2 of phi2
    case SurfaceId::BendingSpacelike: return Vec3R{0.0, one ? -kPi : 0.0, 0.0};
    // residues -i(lambda+mu)/2 and i(lambda+mu)/2 of phi2; phi1 has residue
    // lambda, whose period is imaginary
    case SurfaceId::HelicoidalSpacelikeI:
      return Vec3R{0.0, one ? kPi * (s.lambda() + s.mu()) : 0.0, 0.0};
    case SurfaceId::HelicoidalSpacelikeII:
      return Vec3R{0.0, one ? -kPi * (s.lambda() + s.mu()) : 0.0, 0.0};
    default: return std::nullopt;
  }
}

std::optional<CurvatureOracle> dual_curvature_oracle(const CatalogSurface& s) {
  if (s.id() == SurfaceId::BendingSpacelike && positive_integer(s.a())) {
    // g is rational of degree n + 1 in w
    return CurvatureOracle{weierstrass_pair(dualize(forms_for(s, Chart::Punctured))),
                           Annulus{1e-3, 1e3}, -4.0 * kPi * (s.a() + 1.0)};
  }
  if (s.id() == SurfaceId::LightlikeRotational) {
    // g is a Möbius map
    return CurvatureOracle{weierstrass_pair(dualize(forms_for(s))), Annulus{0.0, 1e3},
                           -4.0 * kPi};
  }
  return std::nullopt;
}

VerificationReport run_verify(const JobConfig& cfg) {
  const CatalogSurface s = make_surface(cfg.family);
  const Tolerances& tol = cfg.tolerances;
  const Suite suite = cfg.verify.suite;
  const bool all = suite == Suite::All;
  const Grid& grid = cfg.grid;

  const auto src = bjorling_source(s);
  std::optional<BjorlingData> data;
  std::optional<SurfacePatch> bjorling;
  if (src) {
    data = make_bjorling_data(src->curve, src->normal, cfg.u0);
    bjorling = solve_bjorling(*data, cfg.quadrature, grid.rect);
  }
  const SurfacePatch catalog = catalog_patch(cfg);
  const SurfacePatch& subject = cfg.source == Source::Bjorling ? *bjorling : catalog;

  VerificationReport r;
  if (all) {
    if (bjorling) {
      guarded(r, "oracle.catalog_vs_bjorling", [&] {
        Check c = make_check("oracle.catalog_vs_bjorling", max_deviation(catalog, *bjorling, grid),
                             tol.oracle, grid);
        c.details = {{"quadrature_nodes", cfg.quadrature.nodes}};
        r.add(std::move(c));
      });
    } else {
      r.skipped.push_back("oracle: " + s.label() + " has no Björling data");
    }
  }

  if (all || suite == Suite::H) {
    guarded(r, "mean_curvature", [&] {
      const Grid inner = grid.interior();
      const GridMaximum h = mean_curvature_residual(subject, inner, tol.fd_step, tol.singular);
      Check c = make_check("mean_curvature", h.max_residual, tol.mean_curvature, inner);
      c.excluded = h.excluded;
      c.details = {{"evaluated", h.evaluated}, {"fd_step", tol.fd_step}, {"singular", tol.singular}};
      const double second = kernels::max_index(inner.size(), [&](int k) {
        const FundamentalForms ff =
            fundamental_forms(subject, inner.u(k % inner.nu), inner.v(k / inner.nu), tol.fd_step);
        return std::abs(ff.e) + std::abs(ff.f) + std::abs(ff.g);
      });
      c.details.emplace_back("max_second_form", second);
      r.add(std::move(c));
    });
  }

  if (all) {
    if (s.id() == SurfaceId::EnneperSecondKind) {
      r.skipped.push_back("conformality: the orbit parametrization is not conformal");
    } else {
      guarded(r, "conformality", [&] {
        const Grid inner = grid.interior();
        const GridMaximum cm = conformality_residual(subject, inner, tol.tangent_step, tol.singular);
        Check c = make_check("conformality", cm.max_residual, tol.conformality, inner);
        c.excluded = cm.excluded;
        r.add(std::move(c));
      });
    }
    if (data) {
      std::vector<double> us;
      for (int i = 0; i < grid.nu; ++i) us.push_back(grid.u(i));
      const VerificationReport rec = bjorling_recovery(
          subject, *data, us, tol.fd_step, {tol.recovery_position, tol.recovery_normal});
      r.append(rec);
    }
  }

  if (all || suite == Suite::Equivariance) {
    if (const auto group = symmetry_group(s)) {
      guarded(r, "equivariance", [&] {
        r.add(equivariance(subject, *group, {-1.0, -0.3, 0.3, 1.0}, grid, tol.equivariance));
      });
    } else {
      r.skipped.push_back("equivariance: " + s.label() + " has no symmetry group");
    }
  }

  if (all) weierstrass_checks(r, cfg, s, data);
  if (all || suite == Suite::Periods) period_checks(r, cfg, s);
  if (suite == Suite::Curvature || (all && cfg.verify.total_curvature)) curvature_check(r, cfg, s);
  return r;
}

int cmd_sample(const JobConfig& cfg, std::ostream& /*out*/, std::ostream& err) {
  try {
    if (cfg.output.obj.empty() && cfg.output.csv.empty())
      throw ConfigError("sample: set output.obj or output.csv (or --out)");
    const MeshOutput mesh = sample_mesh(cfg);
    if (!cfg.output.obj.empty())
      write_file(cfg.output.obj, [&](std::ostream& o) { write_obj(o, mesh); });
    if (!cfg.output.csv.empty())
      write_file(cfg.output.csv, [&](std::ostream& o) { write_csv(o, mesh); });
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const VerificationReport r = run_verify(cfg);
    const std::string text = dump_report(report_json(cfg, r));
    if (cfg.output.report.empty()) {
      out << text;
    } else {
      write_file(cfg.output.report, [&](std::ostream& o) { o << text; });
    }
    for (const Check& c : r.checks)
      if (!c.pass) err << "maxsurf: check failed: " << c.name << '\n';
    return r.passed() ? kExitOk : kExitCheckFailure;
  } catch (const ConfigError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "maxsurf: " << e.what() << '\n';
    return kExitCheckFailure;
  }
}

int cmd_families(std::ostream& out) {
  out << "id                      parameters\n"
         "BendingTimelike         a > 0\n"
         "BendingSpacelike        a > 0 (periods and dual curvature for integer a)\n"
         "LightlikeRotational     a any real\n"
         "HelicoidalTimelike      a > 0, 0 < lambda < 1\n"
         "HelicoidalSpacelikeI    a > 0, lambda > 1\n"
         "HelicoidalSpacelikeII   a > 0, lambda > 0\n"
         "EllipticCatenoid        a any real (a = 0 is the plane)\n"
         "HyperbolicCatenoid      a any real\n"
         "HelicoidTimelikeConst   a any real, 0 < lambda < 1\n"
         "EnneperSecondKind       a any real, or lambda > 0 and mu of the generating curve\n";
  return kExitOk;
}

}  // namespace maxsurf::app
