#include "maxsurf/app/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "maxsurf/error.hpp"

namespace maxsurf::app {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void expect_object(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field.empty() ? "<root>" : field, "expected an object");
}

void only_keys(const json& j, const std::string& field, std::initializer_list<std::string_view> keys) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (std::string_view k : keys) known = known || item.key() == k;
    if (!known) fail(join(field, item.key()), "unknown field");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

double positive(const json& j, const std::string& field) {
  const double v = number(j, field);
  if (!(v > 0.0)) fail(field, "must be > 0");
  return v;
}

int integer(const json& j, const std::string& field, int min) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  const long long v = j.get<long long>();
  if (v < min || v > 1'000'000) fail(field, "must be in [" + std::to_string(min) + ", 1000000]");
  return static_cast<int>(v);
}

std::string text(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

bool boolean(const json& j, const std::string& field) {
  if (!j.is_boolean()) fail(field, "expected true or false");
  return j.get<bool>();
}

template <class F>
void each(const json& obj, const std::string& field, F&& fn) {
  for (const auto& item : obj.items()) fn(item.key(), item.value(), join(field, item.key()));
}

void parse_family(const json& j, FamilySpec& f) {
  expect_object(j, "family");
  only_keys(j, "family", {"id", "a", "lambda", "mu"});
  if (!j.contains("id")) fail("family.id", "required");
  const std::string id = text(j.at("id"), "family.id");
  const auto sid = surface_id_from_string(id);
  if (!sid) fail("family.id", "unknown family '" + id + "' (see `maxsurf families`)");
  f.id = *sid;
  if (j.contains("a")) f.a = number(j.at("a"), "family.a");
  if (j.contains("lambda")) f.lambda = number(j.at("lambda"), "family.lambda");
  if (j.contains("mu")) f.mu = number(j.at("mu"), "family.mu");
}

void parse_grid(const json& j, Grid& g) {
  expect_object(j, "grid");
  only_keys(j, "grid", {"u_min", "u_max", "v_min", "v_max", "nu", "nv"});
  each(j, "grid", [&](const std::string& k, const json& v, const std::string& field) {
    if (k == "nu") g.nu = integer(v, field, 2);
    else if (k == "nv") g.nv = integer(v, field, 2);
    else if (k == "u_min") g.rect.u_min = number(v, field);
    else if (k == "u_max") g.rect.u_max = number(v, field);
    else if (k == "v_min") g.rect.v_min = number(v, field);
    else g.rect.v_max = number(v, field);
  });
  if (!(g.rect.u_min < g.rect.u_max)) fail("grid.u_max", "must exceed grid.u_min");
  if (!(g.rect.v_min < g.rect.v_max)) fail("grid.v_max", "must exceed grid.v_min");
  if (static_cast<long long>(g.nu) * g.nv > 16'000'000) fail("grid", "more than 16M nodes");
}

void parse_quadrature(const json& j, JobConfig& cfg) {
  expect_object(j, "quadrature");
  only_keys(j, "quadrature", {"rule", "nodes", "tol", "u0", "fallback_abs_v"});
  QuadratureSpec& q = cfg.quadrature;
  each(j, "quadrature", [&](const std::string& k, const json& v, const std::string& field) {
    if (k == "rule") {
      const std::string r = text(v, field);
      if (r == "gauss-legendre") q.rule = QuadratureSpec::Rule::GaussLegendre;
      else if (r == "adaptive-simpson") q.rule = QuadratureSpec::Rule::AdaptiveSimpson;
      else fail(field, "expected \"gauss-legendre\" or \"adaptive-simpson\"");
    } else if (k == "nodes") {
      q.nodes = integer(v, field, 4);
    } else if (k == "tol") {
      q.tol = positive(v, field);
    } else if (k == "fallback_abs_v") {
      q.fallback_abs_v = positive(v, field);
    } else {
      cfg.u0 = number(v, field);
    }
  });
}

void parse_tolerances(const json& j, Tolerances& t) {
  expect_object(j, "tolerances");
  struct Slot {
    std::string_view key;
    double* value;
  };
  const Slot slots[] = {{"oracle", &t.oracle},
                        {"mean_curvature", &t.mean_curvature},
                        {"conformality", &t.conformality},
                        {"recovery_position", &t.recovery_position},
                        {"recovery_normal", &t.recovery_normal},
                        {"equivariance", &t.equivariance},
                        {"null_condition", &t.null_condition},
                        {"reconstruction", &t.reconstruction},
                        {"bjorling_identity", &t.bjorling_identity},
                        {"period", &t.period},
                        {"period_vanishing", &t.period_vanishing},
                        {"curvature_relative", &t.curvature_relative},
                        {"fd_step", &t.fd_step},
                        {"tangent_step", &t.tangent_step},
                        {"singular", &t.singular}};
  each(j, "tolerances", [&](const std::string& k, const json& v, const std::string& field) {
    for (const Slot& s : slots) {
      if (s.key == k) {
        *s.value = positive(v, field);
        return;
      }
    }
    fail(field, "unknown field");
  });
}

void parse_output(const json& j, OutputSpec& o) {
  expect_object(j, "output");
  only_keys(j, "output", {"obj", "csv", "report"});
  if (j.contains("obj")) o.obj = text(j.at("obj"), "output.obj");
  if (j.contains("csv")) o.csv = text(j.at("csv"), "output.csv");
  if (j.contains("report")) o.report = text(j.at("report"), "output.report");
}

void parse_verify(const json& j, VerifySpec& vs) {
  expect_object(j, "verify");
  only_keys(j, "verify", {"suite", "total_curvature", "annulus", "curvature_grid"});
  if (j.contains("suite")) {
    const auto s = suite_from_string(text(j.at("suite"), "verify.suite"));
    if (!s) fail("verify.suite", "expected all, h, periods, curvature or equivariance");
    vs.suite = *s;
  }
  if (j.contains("total_curvature"))
    vs.total_curvature = boolean(j.at("total_curvature"), "verify.total_curvature");
  if (j.contains("annulus")) {
    const json& a = j.at("annulus");
    expect_object(a, "verify.annulus");
    only_keys(a, "verify.annulus", {"r_in", "r_out"});
    Annulus an;
    if (a.contains("r_in")) an.r_in = number(a.at("r_in"), "verify.annulus.r_in");
    if (a.contains("r_out")) an.r_out = positive(a.at("r_out"), "verify.annulus.r_out");
    if (!(an.r_in >= 0.0 && an.r_in < an.r_out)) fail("verify.annulus", "need 0 <= r_in < r_out");
    vs.annulus = an;
  }
  if (j.contains("curvature_grid")) {
    const json& g = j.at("curvature_grid");
    expect_object(g, "verify.curvature_grid");
    only_keys(g, "verify.curvature_grid", {"nr", "ntheta"});
    if (g.contains("nr")) vs.curvature_grid.nr = integer(g.at("nr"), "verify.curvature_grid.nr", 1);
    if (g.contains("ntheta"))
      vs.curvature_grid.ntheta = integer(g.at("ntheta"), "verify.curvature_grid.ntheta", 4);
  }
}

}  // namespace

const char* to_string(Source s) { return s == Source::Catalog ? "catalog" : "bjorling"; }

const char* to_string(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::H: return "h";
    case Suite::Periods: return "periods";
    case Suite::Curvature: return "curvature";
    case Suite::Equivariance: return "equivariance";
  }
  return "?";
}

std::optional<Suite> suite_from_string(const std::string& s) {
  for (Suite x : {Suite::All, Suite::H, Suite::Periods, Suite::Curvature, Suite::Equivariance})
    if (s == to_string(x)) return x;
  return std::nullopt;
}

JobConfig parse_config(const json& doc) {
  JobConfig cfg;
  expect_object(doc, "");
  only_keys(doc, "", {"family", "source", "grid", "quadrature", "tolerances", "output", "verify",
                      "fault_injection"});
  if (doc.contains("family")) parse_family(doc.at("family"), cfg.family);
  if (doc.contains("source")) {
    const std::string s = text(doc.at("source"), "source");
    if (s == "catalog") cfg.source = Source::Catalog;
    else if (s == "bjorling") cfg.source = Source::Bjorling;
    else fail("source", "expected \"catalog\" or \"bjorling\"");
  }
  if (doc.contains("grid")) parse_grid(doc.at("grid"), cfg.grid);
  if (doc.contains("quadrature")) parse_quadrature(doc.at("quadrature"), cfg);
  if (doc.contains("tolerances")) parse_tolerances(doc.at("tolerances"), cfg.tolerances);
  if (doc.contains("output")) parse_output(doc.at("output"), cfg.output);
  if (doc.contains("verify")) parse_verify(doc.at("verify"), cfg.verify);
  if (doc.contains("fault_injection")) {
    const json& f = doc.at("fault_injection");
    expect_object(f, "fault_injection");
    only_keys(f, "fault_injection", {"catalog_perturbation"});
    if (f.contains("catalog_perturbation"))
      cfg.catalog_perturbation =
          number(f.at("catalog_perturbation"), "fault_injection.catalog_perturbation");
  }
  // surface parameters are validated here so that bad input is a config error
  make_surface(cfg.family);
  if (cfg.source == Source::Bjorling && !bjorling_source(make_surface(cfg.family)))
    fail("source", std::string(to_string(cfg.family.id)) + " has no Björling data");
  return cfg;
}

json load_config_document(const std::filesystem::path& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading config file '" + path.string() + "'");
  const std::string content = buf.str();
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    // report the byte offset as line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < content.size(); ++i) {
      if (content[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": invalid JSON");
  }
}

void apply_override(json& doc, const std::string& dotted_path, const std::string& value) {
  if (dotted_path.empty()) throw ConfigError("empty override path");
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = dotted_path.find('.', start);
    const std::string key = dotted_path.substr(start, dot - start);
    if (key.empty()) throw ConfigError("bad override path '" + dotted_path + "'");
    if (!node->is_object()) *node = json::object();
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  json parsed = json::parse(value, nullptr, false);
  *node = parsed.is_discarded() || parsed.is_object() || parsed.is_array() ? json(value) : parsed;
}

JobConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
  json doc = load_config_document(path);
  for (const auto& [k, v] : overrides) apply_override(doc, k, v);
  return parse_config(doc);
}

CatalogSurface make_surface(const FamilySpec& f) {
  try {
    if (f.id == SurfaceId::EnneperSecondKind) {
      return CatalogSurface::enneper_second_kind(
          f.mu ? GeneratingCurve{f.lambda, *f.mu} : GeneratingCurve::for_lightlike_circle(f.a));
    }
    if (f.mu) throw ConfigError("config field 'family.mu': only used by EnneperSecondKind");
    return CatalogSurface::make(f.id, f.a, f.lambda);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config field 'family': ") + e.what());
  }
}

}  // namespace maxsurf::app
