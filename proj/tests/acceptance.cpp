// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "maxsurf/app/commands.hpp"
#include "maxsurf/bjorling.hpp"
#include "maxsurf/catalog.hpp"
#include "maxsurf/motion.hpp"
#include "maxsurf/verify.hpp"
#include "maxsurf/weierstrass.hpp"

using namespace maxsurf;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kOracleTol = 1e-8;
constexpr double kOracleSeconds = 60.0;
constexpr double kMaximalTol = 1e-5;
constexpr double kControlFloor = 0.1;
constexpr double kSingularBand = 0.15;  // ||g| - 1| allowed at an excluded node
constexpr double kNullTol = 1e-10;
constexpr double kReconstructionTol = 1e-10;
constexpr double kIdentityTol = 1e-12;
constexpr double kVanishingPeriodTol = 1e-10;
constexpr double kPeriodTol = 1e-6;
constexpr double kDualCurvatureRel = 0.05;
constexpr double kSyntheticCurvatureRel = 0.01;
constexpr double kCurvatureSeconds = 30.0;
constexpr double kEquivarianceTol = 1e-9;
constexpr double kEtaTol = 1e-12;
constexpr double kOdeTol = 1e-12;
constexpr double kIdentificationTol = 1e-10;
constexpr double kBranchTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::ostringstream info;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      info << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const Grid kSquare{{-1, 1, -1, 1}, 21, 21};

struct Member {
  SurfaceId id;
  double a;
  double lambda = 0.0;
};

BjorlingData data_of(const CatalogSurface& s) {
  const auto src = bjorling_source(s);
  return make_bjorling_data(src->curve, src->normal);
}

// 100 points of [-1, 1]^2 on a fixed lattice walk.
std::vector<Complex> sample_points() {
  std::vector<Complex> zs;
  for (int k = 0; k < 100; ++k) {
    const double u = std::fmod(0.6180339887498949 * (k + 1), 1.0);
    const double v = std::fmod(0.7548776662466927 * (k + 1), 1.0);
    zs.emplace_back(2 * u - 1, 2 * v - 1);
  }
  return zs;
}

double cnorm1(const Vec3C& p) { return std::abs(p.x) + std::abs(p.y) + std::abs(p.z); }

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Member> members = {
      {SurfaceId::BendingTimelike, 0.5},        {SurfaceId::BendingTimelike, 1},
      {SurfaceId::BendingTimelike, 2},          {SurfaceId::BendingSpacelike, 0.5},
      {SurfaceId::BendingSpacelike, 1},         {SurfaceId::BendingSpacelike, 2},
      {SurfaceId::HelicoidalTimelike, 1, 0.6},  {SurfaceId::HelicoidalSpacelikeI, 1, 2},
      {SurfaceId::HelicoidalSpacelikeII, 1, 1}, {SurfaceId::LightlikeRotational, 0},
      {SurfaceId::LightlikeRotational, 1}};
  double worst = 0.0;
  for (const Member& m : members) {
    const CatalogSurface s = CatalogSurface::make(m.id, m.a, m.lambda);
    const double d = max_deviation(make_patch(s), solve_bjorling(data_of(s)), kSquare);
    o.require(d < kOracleTol, s.label());
    worst = std::max(worst, d);
  }
  const double t = seconds_since(t0);
  o.require(t < kOracleSeconds, "runtime");
  o.info << " max=" << worst << " tol=" << kOracleTol << " time=" << t << "s";
}

// ||g| - 1| at the excluded nodes, with g from the Björling forms.
double excluded_distance_from_unit(const CatalogSurface& s, const std::vector<GridPoint>& excluded) {
  if (excluded.empty() || !bjorling_source(s)) return 0.0;
  const WeierstrassData w = weierstrass_pair(forms_from_bjorling(data_of(s)));
  double worst = 0.0;
  for (const GridPoint& p : excluded) worst = std::max(worst, std::abs(std::abs(w.g({p.u, p.v})) - 1.0));
  return worst;
}

std::vector<CatalogSurface> every_catalog_surface() {
  std::vector<CatalogSurface> out;
  for (const Member& m : std::vector<Member>{{SurfaceId::BendingTimelike, 0.5},
                                             {SurfaceId::BendingTimelike, 2},
                                             {SurfaceId::BendingSpacelike, 0.5},
                                             {SurfaceId::BendingSpacelike, 1},
                                             {SurfaceId::BendingSpacelike, 2},
                                             {SurfaceId::LightlikeRotational, 0},
                                             {SurfaceId::LightlikeRotational, 1},
                                             {SurfaceId::HelicoidalTimelike, 1, 0.6},
                                             {SurfaceId::HelicoidalSpacelikeI, 1, 2},
                                             {SurfaceId::HelicoidalSpacelikeII, 1, 1},
                                             {SurfaceId::EllipticCatenoid, 1},
                                             {SurfaceId::EllipticCatenoid, 0},
                                             {SurfaceId::HyperbolicCatenoid, 0.8},
                                             {SurfaceId::HelicoidTimelikeConst, 0.5, 0.6}})
    out.push_back(CatalogSurface::make(m.id, m.a, m.lambda));
  out.push_back(CatalogSurface::enneper_second_kind(GeneratingCurve::for_lightlike_circle(0.0)));
  return out;
}

// Max |H| on the interior grid; records the excluded-node distance to |g| = 1.
double maximality(Outcome& o, const SurfacePatch& p, const CatalogSurface& s, double& band) {
  const GridMaximum m = mean_curvature_residual(p, kSquare.interior());
  o.require(m.max_residual < kMaximalTol, s.label());
  o.require(m.evaluated > 0, s.label() + " no nodes");
  band = std::max(band, excluded_distance_from_unit(s, m.excluded));
  return m.max_residual;
}

void criterion2(Outcome& o) {
  double worst = 0.0, band = 0.0;
  for (const CatalogSurface& s : every_catalog_surface()) worst = std::max(worst, maximality(o, make_patch(s), s, band));
  o.require(band < kSingularBand, "excluded nodes off |g| = 1");

  SurfacePatch hyperboloid;
  hyperboloid.eval = [](double u, double v) { return Vec3R{u, v, std::sqrt(1.0 + u * u + v * v)}; };
  const double control = mean_curvature_residual(hyperboloid, kSquare.interior()).max_residual;
  o.require(control > kControlFloor, "control");
  o.info << " max=" << worst << " tol=" << kMaximalTol << " control=" << control
         << " excluded_max_||g|-1|=" << band;
}

void criterion3(Outcome& o) {
  const std::vector<Complex> zs = sample_points();
  double null_worst = 0.0, rec_worst = 0.0, id_worst = 0.0;
  for (const Member& m : std::vector<Member>{{SurfaceId::BendingTimelike, 1},
                                             {SurfaceId::BendingTimelike, 2},
                                             {SurfaceId::BendingSpacelike, 0.5},
                                             {SurfaceId::BendingSpacelike, 1},
                                             {SurfaceId::BendingSpacelike, 2},
                                             {SurfaceId::LightlikeRotational, 0},
                                             {SurfaceId::LightlikeRotational, 1},
                                             {SurfaceId::HelicoidalTimelike, 1, 0.6},
                                             {SurfaceId::HelicoidalSpacelikeI, 1, 2},
                                             {SurfaceId::HelicoidalSpacelikeII, 1, 1}}) {
    const CatalogSurface s = CatalogSurface::make(m.id, m.a, m.lambda);
    const FormTriple printed = forms_for(s);
    const FormTriple derived = forms_from_bjorling(data_of(s));
    const WeierstrassData w = weierstrass_pair(printed);
    for (Complex z : zs) {
      const Vec3C p = printed(z);
      const double scale = 1.0 + cnorm1(p);
      null_worst = std::max(null_worst, std::abs(null_form(printed, z)) / (scale * scale));
      rec_worst = std::max(rec_worst, cnorm1(p - reconstruct_forms(w, z)) / scale);
      id_worst = std::max(id_worst, cnorm1(p - derived(z)) / scale);
    }
  }
  o.require(null_worst < kNullTol, "null");
  o.require(rec_worst < kReconstructionTol, "reconstruction");
  o.require(id_worst < kIdentityTol, "identity");
  o.info << " null=" << null_worst << " reconstruction=" << rec_worst << " identity=" << id_worst;
}

void criterion4(Outcome& o) {
  double vanish = 0.0, signed_err = 0.0, oracle_err = 0.0;
  for (int n : {1, 2, 3}) {
    const CatalogSurface s = CatalogSurface::make(SurfaceId::BendingSpacelike, n);
    const FormTriple t = forms_for(s, Chart::Punctured);
    const auto oracle = app::expected_real_periods(s);
    o.require(oracle.has_value(), "oracle " + s.label());
    double re[3];
    for (int k = 1; k <= 3; ++k) re[k - 1] = period(t, k, Loop{}).value.real();
    if (oracle) {
      const double expect[3] = {oracle->x, oracle->y, oracle->z};
      for (int k = 0; k < 3; ++k) oracle_err = std::max(oracle_err, std::abs(re[k] - expect[k]));
    }
    if (n == 1) {
      vanish = std::max({vanish, std::abs(re[0]), std::abs(re[2])});
      signed_err = std::abs(re[1] + kPi);
      o.info << " n=1 Re(phi2)=" << re[1];
    } else {
      vanish = std::max({vanish, std::abs(re[0]), std::abs(re[1]), std::abs(re[2])});
    }
  }
  o.require(vanish < kVanishingPeriodTol, "vanishing");
  o.require(signed_err < kPeriodTol, "signed period");
  o.require(oracle_err < kPeriodTol, "residue oracle");
  o.info << " |Re|_vanishing=" << vanish << " |Re(phi2)+pi|=" << signed_err << " vs_oracle=" << oracle_err;
}

void timed_curvature(Outcome& o, const std::string& name, const WeierstrassData& w, Annulus ann, double expected,
                     double rel) {
  const auto t0 = std::chrono::steady_clock::now();
  const double k = total_curvature(w, ann);
  const double t = seconds_since(t0);
  const double err = std::abs(k - expected) / std::abs(expected);
  o.require(err < rel, name);
  o.require(t < kCurvatureSeconds, name + " runtime");
  o.info << " " << name << "=" << k << "/(" << expected << ") rel=" << err << " " << t << "s";
}

void criterion5(Outcome& o) {
  const auto bs = app::dual_curvature_oracle(CatalogSurface::make(SurfaceId::BendingSpacelike, 1));
  const auto lr = app::dual_curvature_oracle(CatalogSurface::make(SurfaceId::LightlikeRotational, 1));
  o.require(bs && lr, "oracles");
  if (!bs || !lr) return;
  timed_curvature(o, "dualBS1", bs->data, {1e-3, 1e3}, -8 * kPi, kDualCurvatureRel);
  timed_curvature(o, "dualLR1", lr->data, lr->annulus, -4 * kPi, kDualCurvatureRel);
  WeierstrassData id;
  id.g = [](Complex z) { return z; };
  id.f = [](Complex) { return Complex(1.0); };
  id.signature = Signature::Euclidean;
  timed_curvature(o, "g=z", id, {0.0, 1e3}, -4 * kPi, kSyntheticCurvatureRel);
}

void criterion6(Outcome& o) {
  const std::vector<double> thetas = {-1.0, -0.3, 0.3, 1.0};
  const Grid grid{{-1, 1, -1, 1}, 11, 11};
  double worst = 0.0, eta = 0.0;
  for (const CatalogSurface& s : {CatalogSurface::make(SurfaceId::EllipticCatenoid, 1),
                                  CatalogSurface::make(SurfaceId::HyperbolicCatenoid, 0.8),
                                  CatalogSurface::make(SurfaceId::LightlikeRotational, 1),
                                  CatalogSurface::make(SurfaceId::HelicoidTimelikeConst, 0.5, 0.6)}) {
    const MotionGroup group = *symmetry_group(s);
    const Check c = equivariance(make_patch(s), group, thetas, grid, kEquivarianceTol);
    o.require(c.pass, s.label());
    worst = std::max(worst, c.max_residual);
  }
  for (const MotionGroup& g : {MotionGroup::rot_timelike(), MotionGroup::rot_spacelike(),
                               MotionGroup::rot_lightlike(), MotionGroup::screw_timelike(0.6)})
    for (double th = -3.0; th <= 3.0; th += 0.25) eta = std::max(eta, eta_residual(g.at(th).linear));
  o.require(eta < kEtaTol, "eta");
  o.info << " equivariance=" << worst << " eta=" << eta;
}

void criterion7(Outcome& o) {
  double ode = 0.0, ident = 0.0, h = 0.0, band = 0.0;
  for (double a : {0.0, 1.0}) {
    const GeneratingCurve g = GeneratingCurve::for_lightlike_circle(a);
    for (int k = 0; k <= 80; ++k)
      ode = std::max(ode, ode_residual(g, g.lambda / 4.0, -2.0 * g.mu, -2.0 + 0.05 * k) / (1.0 + g.lambda));
    for (int k = 0; k <= 40; ++k) ident = std::max(ident, lightlike_identification_check(a, -2.0 + 0.1 * k));
    const CatalogSurface lr = CatalogSurface::make(SurfaceId::LightlikeRotational, a);
    const CatalogSurface orbit = CatalogSurface::enneper_second_kind(g);
    h = std::max(h, maximality(o, make_patch(lr), lr, band));
    h = std::max(h, maximality(o, make_patch(orbit), orbit, band));
  }
  o.require(ode < kOdeTol, "ode");
  o.require(ident < kIdentificationTol, "Z(u,-1/2)");
  o.info << " ode=" << ode << " identification=" << ident << " H=" << h;
}

void criterion8(Outcome& o) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double u = -1.0 + 2.0 * std::fmod(0.6180339887498949 * (k + 1), 1.0);
    const double v = -1.0 + 2.0 * std::fmod(0.7548776662466927 * (k + 1), 1.0);
    for (double a : {1.0 - 1e-7, 1.0 + 1e-7}) {
      worst = std::max(worst, euclid_norm(formulas::bending_spacelike_general(a, u, v) -
                                          formulas::bending_spacelike_unit(u, v)));
      worst = std::max(worst, euclid_norm(formulas::helicoidal_spacelike_i_general(a, 2.0, u, v) -
                                          formulas::helicoidal_spacelike_i_unit(2.0, u, v)));
      worst = std::max(worst, euclid_norm(formulas::helicoidal_spacelike_ii_general(a, 1.0, u, v) -
                                          formulas::helicoidal_spacelike_ii_unit(1.0, u, v)));
    }
    // through the evaluator: inside the unit band, and a symmetric pair
    // straddling each band edge so the first-order drift cancels
    for (auto [id, l] : {std::pair{SurfaceId::BendingSpacelike, 0.0}, std::pair{SurfaceId::HelicoidalSpacelikeI, 2.0},
                         std::pair{SurfaceId::HelicoidalSpacelikeII, 1.0}}) {
      const Vec3R at = eval_surface(CatalogSurface::make(id, 1.0, l), u, v);
      for (double d : {1e-7, -1e-7})
        worst = std::max(worst, euclid_norm(eval_surface(CatalogSurface::make(id, 1.0 + d, l), u, v) - at));
      for (double d : {0.9999e-6, 1.0001e-6}) {
        const Vec3R hi = eval_surface(CatalogSurface::make(id, 1.0 + d, l), u, v);
        const Vec3R lo = eval_surface(CatalogSurface::make(id, 1.0 - d, l), u, v);
        worst = std::max(worst, euclid_norm(0.5 * (hi + lo) - at));
      }
    }
  }
  o.require(worst < kBranchTol, "limit");
  o.info << " max=" << worst << " tol=" << kBranchTol;
}

// Criterion 9 drives the installed binary.
const fs::path kTmp = MAXSURF_TEST_TMP;

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string("\"") + MAXSURF_BIN + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion9(Outcome& o) {
  fs::create_directories(kTmp);
  const fs::path good = kTmp / "job.json", fault = kTmp / "fault.json", bad = kTmp / "bad.json";
  std::ofstream(good) << R"({"family": {"id": "HelicoidalSpacelikeI", "a": 1, "lambda": 2}, "grid": {"nu": 41, "nv": 41}})";
  std::ofstream(fault) << R"({"family": {"id": "BendingTimelike", "a": 1},
  "fault_injection": {"catalog_perturbation": 1e-3}})";
  std::ofstream(bad) << R"({"family": {"id": "NoSuchFamily"}})";
  const std::string cfg = " --config \"" + good.string() + "\"";
  const fs::path null = "/dev/null";

  int codes[8];
  codes[0] = run_cli("sample" + cfg + " --out \"" + (kTmp / "a.obj").string() + "\"", null);
  codes[1] = run_cli("sample" + cfg + " --out \"" + (kTmp / "b.obj").string() + "\"", null);
  codes[2] = run_cli("verify" + cfg, kTmp / "a.json");
  codes[3] = run_cli("verify" + cfg, kTmp / "b.json");
  codes[4] = run_cli("verify --config \"" + fault.string() + "\"", kTmp / "f.json");
  codes[5] = run_cli("verify --config \"" + bad.string() + "\"", null);
  codes[6] = run_cli("verify --config \"" + (kTmp / "missing.json").string() + "\"", null);
  codes[7] = run_cli("sample" + cfg + " --out /nonexistent/dir/x.obj", null);
  const int expected[8] = {0, 0, 0, 0, 1, 2, 3, 3};
  for (int k = 0; k < 8; ++k) o.require(codes[k] == expected[k], "exit " + std::to_string(k));

  const std::string obj = slurp(kTmp / "a.obj"), report = slurp(kTmp / "a.json");
  o.require(!obj.empty() && obj == slurp(kTmp / "b.obj"), "sample bytes");
  o.require(!report.empty() && report == slurp(kTmp / "b.json"), "verify bytes");
  o.require(slurp(kTmp / "f.json").find("\"passed\": false") != std::string::npos, "fault report");
  o.info << " obj=" << obj.size() << "B report=" << report.size() << "B exits=";
  for (int c : codes) o.info << c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"oracle equivalence", criterion1},  {"maximality", criterion2},
      {"Weierstrass identities", criterion3}, {"periods", criterion4},
      {"total curvature", criterion5},     {"symmetry", criterion6},
      {"lightlike closure", criterion7},   {"branch continuity", criterion8},
      {"CLI determinism", criterion9}};
  bool all = true;
  int n = 0;
  for (const auto& [name, body] : criteria) {
    Outcome o;
    o.info.precision(3);
    try {
      body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.info << " threw: " << e.what();
    }
    all = all && o.pass;
    std::printf("criterion %d %s: %s%s\n", ++n, name, o.pass ? "PASS" : "FAIL", o.info.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
