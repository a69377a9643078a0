#pragma once

// Finite-difference checks of maximality, conformality, the Björling
// boundary data and symmetry.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxsurf/frames.hpp"
#include "maxsurf/kernels.hpp"
#include "maxsurf/motion.hpp"
#include "maxsurf/patch.hpp"

namespace maxsurf {

inline constexpr double kDefaultStep = 1e-3;
// First derivatives only; the Richardson step leaves O(h^4) truncation.
inline constexpr double kTangentStep = 1e-4;
// A node counts as spacelike when the area ratio below exceeds this; for a
// conformal maximal patch it means ||g| - 1| above roughly 1e-3.
inline constexpr double kBranchTolerance = 1e-6;
// Mean curvature from finite differences loses roughly 1 / (area_ratio * E)
// digits next to the singular set, so the H and conformality residuals skip
// nodes whose area ratio is below this (about 10% from |g| = 1).
inline constexpr double kSingularTolerance = 1e-2;

struct FundamentalForms {
  double E = 0, F = 0, G = 0;
  double e = 0, f = 0, g = 0;
  Vec3R normal;  // X_u x X_v scaled to <N, N> = -1 (zero when degenerate)
  // sqrt(EG - F^2) / ((|X_u|^2 + |X_v|^2) / 2) with Euclidean norms; 1 for a
  // conformal isometric chart, 0 on the singular set.
  double area_ratio = 0;
  bool spacelike = false;  // E > 0, EG - F^2 > 0 and area_ratio > tol
};

/// Lorentzian first and second fundamental forms from Richardson central
/// differences. Throws std::invalid_argument for h <= 0.
FundamentalForms fundamental_forms(const SurfacePatch& p, double u, double v,
                                   double h = kDefaultStep, double tol = kBranchTolerance);

/// (eG - 2fF + gE) / (2(EG - F^2)).
double mean_curvature(const FundamentalForms& ff);

struct GridPoint {
  double u, v;
};

struct GridMaximum {
  double max_residual = 0;
  std::vector<GridPoint> excluded;  // skipped nodes, grid order
  int evaluated = 0;                // nodes that entered the maximum
};

/// Max |H| over the grid, skipping and listing nodes with area ratio <= tol.
GridMaximum mean_curvature_residual(const SurfacePatch& p, const Grid& grid,
                                    double h = kDefaultStep, double tol = kSingularTolerance,
                                    kernels::Backend backend = kernels::Backend::OpenMP);

/// Max of max(|E - G|, |F|) / ((E + G) / 2), skipping nodes as above.
GridMaximum conformality_residual(const SurfacePatch& p, const Grid& grid,
                                  double h = kTangentStep, double tol = kSingularTolerance,
                                  kernels::Backend backend = kernels::Backend::OpenMP);

/// 1 where the node is spacelike in the sense of FundamentalForms, grid order.
std::vector<std::uint8_t> spacelike_region(const SurfacePatch& p, const Grid& grid,
                                           double tol = kBranchTolerance, double h = kDefaultStep,
                                           kernels::Backend backend = kernels::Backend::OpenMP);

/// Max Euclidean distance between two patches over the grid.
double max_deviation(const SurfacePatch& a, const SurfacePatch& b, const Grid& grid,
                     kernels::Backend backend = kernels::Backend::OpenMP);

struct Check {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::optional<Grid> grid;
  std::vector<GridPoint> excluded;
  // Extra named numbers (periods, node counts, the resolved normal sign).
  std::vector<std::pair<std::string, double>> details;
  std::string note;  // why a check failed without a residual
};

/// Builds a check that passes iff residual < tolerance (NaN fails).
Check make_check(std::string name, double residual, double tolerance,
                 std::optional<Grid> grid = std::nullopt);

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<std::string> skipped;  // requested checks that do not apply

  bool passed() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  const Check* find(const std::string& name) const;
};

struct RecoveryTolerances {
  double position = 1e-8;
  double normal = 1e-6;
};

/// X(u, 0) = alpha(u) and N(u, 0) = sigma V(u) at the given u. sigma is
/// fixed by the first sample and recorded as the detail "normal_sign".
VerificationReport bjorling_recovery(const SurfacePatch& p, const BjorlingData& data,
                                     const std::vector<double>& us, double h = kDefaultStep,
                                     RecoveryTolerances tol = {});

/// Max |Psi(theta) X(u, v) - X(u + theta, v)| over thetas and the grid.
Check equivariance(const SurfacePatch& p, const MotionGroup& group,
                   const std::vector<double>& thetas, const Grid& grid, double tol = 1e-9,
                   kernels::Backend backend = kernels::Backend::OpenMP);

/// The same patch moved by a rigid motion.
SurfacePatch transform_patch(const SurfacePatch& p, const RigidMotion& m);

}  // namespace maxsurf
