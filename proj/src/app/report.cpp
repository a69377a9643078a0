#include "maxsurf/app/report.hpp"

namespace maxsurf::app {

using nlohmann::ordered_json;

ordered_json grid_json(const Grid& g) {
  ordered_json j;
  j["u_min"] = g.rect.u_min;
  j["u_max"] = g.rect.u_max;
  j["v_min"] = g.rect.v_min;
  j["v_max"] = g.rect.v_max;
  j["nu"] = g.nu;
  j["nv"] = g.nv;
  return j;
}

ordered_json check_json(const Check& c) {
  ordered_json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["max_residual"] = c.max_residual;  // NaN serializes as null
  j["tolerance"] = c.tolerance;
  if (c.grid) j["grid"] = grid_json(*c.grid);
  if (!c.excluded.empty()) {
    ordered_json pts = ordered_json::array();
    for (const GridPoint& p : c.excluded) pts.push_back({p.u, p.v});
    j["excluded"] = {{"count", c.excluded.size()}, {"points", std::move(pts)}};
  }
  if (!c.details.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : c.details) d[k] = v;
    j["details"] = std::move(d);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ordered_json report_json(const JobConfig& cfg, const VerificationReport& r) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";

  const CatalogSurface s = make_surface(cfg.family);
  ordered_json fam;
  fam["id"] = to_string(cfg.family.id);
  fam["label"] = s.label();
  fam["a"] = cfg.family.a;
  fam["lambda"] = cfg.family.lambda;
  if (cfg.family.mu) fam["mu"] = *cfg.family.mu;
  j["family"] = std::move(fam);
  j["source"] = to_string(cfg.source);
  j["suite"] = to_string(cfg.verify.suite);
  j["grid"] = grid_json(cfg.grid);

  const QuadratureSpec& q = cfg.quadrature;
  ordered_json quad;
  quad["rule"] = q.rule == QuadratureSpec::Rule::GaussLegendre ? "gauss-legendre" : "adaptive-simpson";
  quad["nodes"] = q.nodes;
  quad["tol"] = q.tol;
  quad["fallback_abs_v"] = q.fallback_abs_v;
  quad["u0"] = cfg.u0;
  j["quadrature"] = std::move(quad);

  const Tolerances& t = cfg.tolerances;
  j["tolerances"] = {{"oracle", t.oracle},
                     {"mean_curvature", t.mean_curvature},
                     {"conformality", t.conformality},
                     {"recovery_position", t.recovery_position},
                     {"recovery_normal", t.recovery_normal},
                     {"equivariance", t.equivariance},
                     {"null_condition", t.null_condition},
                     {"reconstruction", t.reconstruction},
                     {"bjorling_identity", t.bjorling_identity},
                     {"period", t.period},
                     {"period_vanishing", t.period_vanishing},
                     {"curvature_relative", t.curvature_relative},
                     {"fd_step", t.fd_step},
                     {"tangent_step", t.tangent_step},
                     {"singular", t.singular}};
  if (cfg.catalog_perturbation != 0.0)
    j["fault_injection"] = {{"catalog_perturbation", cfg.catalog_perturbation}};

  ordered_json checks = ordered_json::array();
  for (const Check& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["skipped"] = r.skipped;
  j["passed"] = r.passed();
  return j;
}

std::string dump_report(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace maxsurf::app
