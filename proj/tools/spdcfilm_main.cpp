#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "spdcfilm/config.hpp"
#include "spdcfilm/errors.hpp"
#include "spdcfilm/run.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitIo = 4;

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  int threads = -1;
  bool dry_run = false;
};

int execute(const std::string& scan_type, const CliOptions& opt) {
  spdcfilm::KeyValueMap raw;
  try {
    if (!opt.config_path.empty())
      raw = spdcfilm::parse_config_file(opt.config_path);
  } catch (const spdcfilm::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  // The subcommand pins the scan type; a conflicting config is an error.
  const auto it = raw.find("scan.type");
  if (it != raw.end() && it->second != scan_type) {
    std::cerr << "configuration invalid:\n  - scan.type: config says '"
              << it->second << "' but subcommand is '" << scan_type << "'\n";
    return kExitValidation;
  }
  raw["scan.type"] = scan_type;
  if (!opt.out_dir.empty()) raw["output.dir"] = opt.out_dir;
  if (opt.threads >= 0) raw["run.threads"] = std::to_string(opt.threads);

  spdcfilm::RunConfig cfg;
  try {
    cfg = spdcfilm::validate(raw);
  } catch (const spdcfilm::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  if (opt.dry_run) {
    for (const auto& [k, v] : cfg.echo) std::cout << k << " = " << v << "\n";
    return 0;
  }

  try {
    const auto result = spdcfilm::run(cfg);
    std::cout << "wrote " << result.grid_csv << "\n";
    if (!result.tomography_csv.empty())
      std::cout << "wrote " << result.tomography_csv << "\n";
    if (!result.rho_json.empty()) std::cout << "wrote " << result.rho_json << "\n";
    std::cout << "wrote " << result.summary_json << "\n";
  } catch (const spdcfilm::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const spdcfilm::PhysicsError& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return kExitPhysics;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spdcfilm: far-field photon-pair generation in a nonlinear thin film"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string selected;
  for (const char* name :
       {"rate", "phi-symmetric", "thickness", "theta-map", "tomography",
        "schmidt-map", "wavelength-sweep"}) {
    auto* sub = app.add_subcommand(name, "run a '" + std::string(name) + "' scan");
    sub->add_option("--config", opt.config_path, "configuration file");
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    sub->add_flag("--dry-run", opt.dry_run,
                  "validate and echo the resolved config without computing");
    sub->callback([&selected, name] { selected = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return execute(selected, opt);
}
