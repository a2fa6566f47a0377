// fracwave: configuration-driven experiment runner.
//
//   fracwave run --config cfg.json [--out DIR] [--seed U64] [--threads N]
//   fracwave validate --config cfg.json
//   fracwave presets [--emit DIR]
//
// Exit codes: 0 success, 2 validation failure, 3 numerical failure (partial
// bundle retained), 4 I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fracwave/experiments.hpp"
#include "fracwave/presets.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_override,
                std::uint64_t seed, bool seed_set, int threads, bool threads_set) {
  fracwave::ExperimentConfig cfg = fracwave::load_config(config_path);
  if (!out_override.empty()) cfg.output_dir = out_override;
  if (seed_set) cfg.seed = seed;
  if (threads_set) cfg.threads = threads;
  // reflect the effective values in the manifest copy
  cfg.raw["output_dir"] = cfg.output_dir;
  cfg.raw["seed"] = cfg.seed;
  cfg.raw["threads"] = cfg.threads;

  try {
    const fracwave::ReportBundle bundle = fracwave::run_experiment(cfg);
    std::cout << "wrote " << bundle.files.size() << " files to " << bundle.directory << "\n";
    for (const auto& f : bundle.files) std::cout << "  " << f << "\n";
    return 0;
  } catch (const fracwave::NumericalError& e) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    std::ofstream err(cfg.output_dir + "/error.json");
    err << "{\n  \"error_class\": \"numerical\",\n  \"message\": " << fracwave::Json(e.what()).dump()
        << "\n}\n";
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

int validate_command(const std::string& config_path) {
  const fracwave::ExperimentConfig cfg = fracwave::load_config(config_path);
  const auto issues = fracwave::validate_config(cfg);
  if (issues.empty()) {
    std::cout << "configuration valid: " << to_string(cfg.kind) << "\n";
    return 0;
  }
  std::cout << issues.size() << " violation(s):\n";
  for (const auto& s : issues) std::cout << "  - " << s << "\n";
  return 2;
}

int presets_command(const std::string& emit_dir) {
  for (const auto& p : fracwave::shipped_presets())
    std::cout << p.name << "\n    " << p.description << "\n";
  if (emit_dir.empty()) return 0;
  std::error_code ec;
  std::filesystem::create_directories(emit_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << emit_dir << "\n";
    return 4;
  }
  for (const auto& p : fracwave::shipped_presets()) {
    const std::string path = emit_dir + "/" + p.name + ".json";
    std::ofstream out(path, std::ios::binary);
    out << p.json << "\n";
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 4;
    }
  }
  std::cout << "emitted " << fracwave::shipped_presets().size() << " presets to " << emit_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral laboratory for structurally damped dispersive waves"};
  app.require_subcommand(1);

  std::string config_path, out_dir, emit_dir;
  std::uint64_t seed = 0;
  int threads = 0;

  auto* run = app.add_subcommand("run", "execute an experiment configuration");
  run->add_option("--config", config_path, "configuration file")->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  auto* run_seed = run->add_option("--seed", seed, "RNG seed (overrides config)");
  auto* run_threads = run->add_option("--threads", threads, "worker threads (overrides config)");

  auto* validate = app.add_subcommand("validate", "check a configuration without running it");
  validate->add_option("--config", config_path, "configuration file")->required();

  auto* presets = app.add_subcommand("presets", "list shipped experiment presets");
  presets->add_option("--emit", emit_dir, "write preset files into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_command(config_path, out_dir, seed, !run_seed->empty(), threads,
                         !run_threads->empty());
    if (validate->parsed()) return validate_command(config_path);
    if (presets->parsed()) return presets_command(emit_dir);
  } catch (const fracwave::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const fracwave::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
