#pragma once

// Job configuration for the command-line tool. A config is one JSON
// document; command-line flags override fields addressed by dotted paths
// ("grid.nu", "family.a").

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "maxsurf/bjorling.hpp"
#include "maxsurf/catalog.hpp"
#include "maxsurf/patch.hpp"
#include "maxsurf/verify.hpp"
#include "maxsurf/weierstrass.hpp"

namespace maxsurf::app {

struct FamilySpec {
  SurfaceId id = SurfaceId::BendingTimelike;
  double a = 1.0;
  double lambda = 0.0;
  // EnneperSecondKind only: explicit generating-curve constants (lambda, mu);
  // without mu the curve through the lightlike-axis circle for `a` is used.
  std::optional<double> mu;
};

enum class Source { Catalog, Bjorling };

struct Tolerances {
  double oracle = 1e-8;
  double mean_curvature = 1e-5;
  double conformality = 1e-6;
  double recovery_position = 1e-8;
  double recovery_normal = 1e-6;
  double equivariance = 1e-9;
  double null_condition = 1e-10;
  double reconstruction = 1e-10;
  double bjorling_identity = 1e-12;
  double period = 1e-6;             // a nonzero real period against its residue
  double period_vanishing = 1e-10;  // a real period that must vanish
  double curvature_relative = 0.05;
  double fd_step = 1e-3;
  double tangent_step = kTangentStep;  // conformality
  double singular = kSingularTolerance;
};

struct OutputSpec {
  std::string obj;
  std::string csv;
  std::string report;  // empty: verify prints the report to stdout
};

enum class Suite { All, H, Periods, Curvature, Equivariance };

struct VerifySpec {
  Suite suite = Suite::All;
  bool total_curvature = false;
  std::optional<Annulus> annulus;  // default chosen per family
  CurvatureGrid curvature_grid;
};

struct JobConfig {
  FamilySpec family;
  Source source = Source::Catalog;
  Grid grid{Rect{}, 21, 21};
  QuadratureSpec quadrature;
  double u0 = 0.0;
  Tolerances tolerances;
  OutputSpec output;
  VerifySpec verify;
  // Test fixture: adds this multiple of (u v, 0, u^2 v) to the catalog
  // formulas, which must make the oracle and H checks fail.
  double catalog_perturbation = 0.0;
};

const char* to_string(Source s);
const char* to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& s);

/// Validates and converts a JSON document. Throws ConfigError naming the
/// offending field.
JobConfig parse_config(const nlohmann::json& doc);

/// Reads and parses a config file; an empty path yields the defaults.
/// Throws IoError when the file cannot be read and ConfigError on bad JSON
/// (with line and column) or bad fields.
nlohmann::json load_config_document(const std::filesystem::path& path);

/// Sets the field at a dotted path. The value is parsed as JSON when it is
/// valid JSON (numbers, true/false) and taken as a string otherwise.
void apply_override(nlohmann::json& doc, const std::string& dotted_path, const std::string& value);

using Overrides = std::vector<std::pair<std::string, std::string>>;

JobConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

/// The catalog surface a family spec names. Throws ConfigError.
CatalogSurface make_surface(const FamilySpec& f);

}  // namespace maxsurf::app
