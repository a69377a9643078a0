#pragma once

#include <iosfwd>
#include <optional>

#include "maxsurf/app/config.hpp"
#include "maxsurf/app/writers.hpp"
#include "maxsurf/verify.hpp"

namespace maxsurf::app {

enum ExitCode : int { kExitOk = 0, kExitCheckFailure = 1, kExitConfigError = 2, kExitIoError = 3 };

/// The closed form, with the configured fault perturbation added.
SurfacePatch catalog_patch(const JobConfig& cfg);
/// The patch the job samples: catalog or numerical Björling solve.
SurfacePatch subject_patch(const JobConfig& cfg);

MeshOutput sample_mesh(const JobConfig& cfg);

/// Real parts of the three periods around the unit circle predicted by the
/// Laurent coefficients of the punctured forms, for integer a >= 1.
std::optional<Vec3R> expected_real_periods(const CatalogSurface& s);

/// -4 pi deg(g) for the dual minimal surface, where the family has one.
struct CurvatureOracle {
  WeierstrassData data;
  Annulus annulus;
  double expected;
};
std::optional<CurvatureOracle> dual_curvature_oracle(const CatalogSurface& s);

VerificationReport run_verify(const JobConfig& cfg);

/// Command bodies. They return an exit code instead of throwing: errors go
/// to `err` prefixed with "maxsurf: ".
int cmd_sample(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_families(std::ostream& out);

}  // namespace maxsurf::app
