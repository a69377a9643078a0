// maxsurf: sample and verify maximal surfaces built on circles and helices.

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "maxsurf/app/commands.hpp"
#include "maxsurf/error.hpp"
#include "maxsurf/kernels.hpp"

namespace {

using maxsurf::app::Overrides;

// Flags are overrides of config fields, named after the field path.
struct OverrideFlags {
  std::vector<std::pair<std::string, std::optional<std::string>>> slots;

  void add(CLI::App* app, const std::string& flag, const std::string& path, const std::string& help) {
    slots.emplace_back(path, std::nullopt);
    // the vector is fully built before parsing, so the address is stable then
    app->add_option_function<std::string>(
        flag, [this, i = slots.size() - 1](const std::string& v) { slots[i].second = v; }, help);
  }

  Overrides collect() const {
    Overrides out;
    for (const auto& [path, value] : slots)
      if (value) out.emplace_back(path, *value);
    return out;
  }
};

void add_common(CLI::App* cmd, OverrideFlags& flags) {
  flags.add(cmd, "--family", "family.id", "family id (see `maxsurf families`)");
  flags.add(cmd, "--a", "family.a", "twist rate a, or the constant angle");
  flags.add(cmd, "--lambda", "family.lambda", "helix pitch lambda");
  flags.add(cmd, "--mu", "family.mu", "generating-curve mu (EnneperSecondKind)");
  flags.add(cmd, "--source", "source", "catalog or bjorling");
  for (const char* f : {"u_min", "u_max", "v_min", "v_max", "nu", "nv"})
    flags.add(cmd, std::string("--grid.") + f, std::string("grid.") + f, std::string("grid ") + f);
  flags.add(cmd, "--quadrature.rule", "quadrature.rule", "gauss-legendre or adaptive-simpson");
  flags.add(cmd, "--quadrature.nodes", "quadrature.nodes", "Gauss-Legendre nodes");
  flags.add(cmd, "--quadrature.tol", "quadrature.tol", "adaptive Simpson tolerance");
  flags.add(cmd, "--quadrature.u0", "quadrature.u0", "base point of the Björling integral");
}

}  // namespace

int main(int argc, char** argv) {
  maxsurf::kernels::configure_threads_from_env();

  CLI::App app{"Maximal surfaces in Lorentz-Minkowski space built on circles and helices"};
  app.require_subcommand(1);

  std::string config_path;
  OverrideFlags sample_flags, verify_flags;

  CLI::App* sample = app.add_subcommand("sample", "write a sampled mesh (OBJ and/or CSV)");
  sample->add_option("--config", config_path, "JSON job config");
  add_common(sample, sample_flags);
  std::optional<std::string> out_path;
  std::string format = "obj";
  sample->add_option_function<std::string>(
      "--out", [&](const std::string& v) { out_path = v; }, "output file");
  sample->add_option("--format", format, "format for --out")->check(CLI::IsMember({"obj", "csv"}));
  sample_flags.add(sample, "--output.obj", "output.obj", "OBJ output path");
  sample_flags.add(sample, "--output.csv", "output.csv", "CSV output path");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite, print a JSON report");
  verify->add_option("--config", config_path, "JSON job config");
  add_common(verify, verify_flags);
  verify_flags.add(verify, "--suite", "verify.suite", "all, h, periods, curvature or equivariance");
  verify_flags.add(verify, "--report", "output.report", "write the report here instead of stdout");
  verify_flags.add(verify, "--verify.total_curvature", "verify.total_curvature",
                   "include the dual total curvature in the full suite");

  app.add_subcommand("families", "list family ids and parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : maxsurf::app::kExitConfigError;
  }

  if (app.got_subcommand("families")) return maxsurf::app::cmd_families(std::cout);

  const bool is_sample = app.got_subcommand(sample);
  Overrides overrides = is_sample ? sample_flags.collect() : verify_flags.collect();
  if (is_sample && out_path) overrides.emplace_back("output." + format, *out_path);

  maxsurf::app::JobConfig cfg;
  try {
    cfg = maxsurf::app::load_config(config_path, overrides);
  } catch (const maxsurf::ConfigError& e) {
    std::cerr << "maxsurf: " << e.what() << '\n';
    return maxsurf::app::kExitConfigError;
  } catch (const maxsurf::IoError& e) {
    std::cerr << "maxsurf: " << e.what() << '\n';
    return maxsurf::app::kExitIoError;
  }

  return is_sample ? maxsurf::app::cmd_sample(cfg, std::cout, std::cerr)
                   : maxsurf::app::cmd_verify(cfg, std::cout, std::cerr);
}
