#pragma once

// Experiment configuration: strict JSON with a fixed schema. Unknown keys are
// errors, not warnings, and the canonical serialization (sorted keys, two
// space indent) is what the manifest embeds so every table is reproducible
// from the manifest alone.

#include <nlohmann/json.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fracwave/models.hpp"
#include "fracwave/solver.hpp"

namespace fracwave {

using Json = nlohmann::json;

enum class ExperimentKind {
  LinearDecay,
  NonlinearRun,
  ExponentTable,
  InequalitySuite,
  BlowupFunctionalSweep,
  RegimeClassify
};

inline const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::LinearDecay: return "linear-decay";
    case ExperimentKind::NonlinearRun: return "nonlinear-run";
    case ExperimentKind::ExponentTable: return "exponent-table";
    case ExperimentKind::InequalitySuite: return "inequality-suite";
    case ExperimentKind::BlowupFunctionalSweep: return "blowup-functional-sweep";
    case ExperimentKind::RegimeClassify: return "regime-classify";
  }
  return "?";
}

struct InitialDataSpec {
  enum class Kind { Gaussian, Bump, RandomSmooth } kind = Kind::Gaussian;
  double width = 1.0;
  double amplitude = 1.0;
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double radius = 1.0;
  std::uint64_t seed = 1;
  int cutoff = 4;
};

struct GridSpec {
  int dim = 1;
  int points = 64;
  double half_width = 10.0;
};

struct SimSpec {
  double p = 2.0;
  double dt = 0.01;
  double t_end = 1.0;
  double amplitude = 1.0;
  double dealias_fraction = 2.0 / 3.0;
  double blowup_factor = 1e6;
  int snapshot_stride = 1;
  bool nonlinear = true;
  bool store_snapshots = false;
  bool project_zero_mode = false;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::ExponentTable;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string output_dir = "out";

  ModelSpec model{};
  GridSpec grid{};
  SimSpec sim{};
  InitialDataSpec initial_data{};

  // exponent-table
  int n_min = 1, n_max = 6;
  double m_reg = 1.0;

  // blowup-functional-sweep
  std::vector<double> sweep_radii{4.0, 8.0, 16.0};
  double functional_p = 2.0;

  Json raw;  // canonical parsed form, embedded in the manifest
};

namespace detail {

inline void require_keys(const Json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ValidationError("config: " + where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key))
      throw ValidationError("config: unknown key '" + key + "' in " + where);
}

template <class T>
T get_or(const Json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("config: key '") + key + "' has the wrong type");
  }
}

inline ModelVariant parse_variant(const std::string& s) {
  for (ModelVariant v : {ModelVariant::AnomalousDiffusion, ModelVariant::FrictionalDamped,
                         ModelVariant::EffectiveStructural, ModelVariant::CriticalStructural,
                         ModelVariant::Schrodinger, ModelVariant::FreeWave,
                         ModelVariant::GeneralizedSchrodinger, ModelVariant::DispersiveStructural,
                         ModelVariant::NonEffectiveStructural})
    if (s == to_string(v)) return v;
  throw ValidationError("config: unknown model variant '" + s + "'");
}

}  // namespace detail

inline ExperimentConfig parse_config(const Json& j) {
  detail::require_keys(j, "top level",
                       {"experiment", "seed", "threads", "output_dir", "model", "grid", "sim",
                        "initial_data", "exponent_table", "functional_sweep"});
  ExperimentConfig cfg;
  cfg.raw = j;
  if (!j.contains("experiment")) throw ValidationError("config: missing 'experiment'");
  const std::string kind = j.at("experiment").get<std::string>();
  bool found = false;
  for (ExperimentKind k : {ExperimentKind::LinearDecay, ExperimentKind::NonlinearRun,
                           ExperimentKind::ExponentTable, ExperimentKind::InequalitySuite,
                           ExperimentKind::BlowupFunctionalSweep, ExperimentKind::RegimeClassify})
    if (kind == to_string(k)) { cfg.kind = k; found = true; }
  if (!found) throw ValidationError("config: unknown experiment kind '" + kind + "'");

  cfg.seed = detail::get_or<std::uint64_t>(j, "seed", 1);
  cfg.threads = detail::get_or<int>(j, "threads", 1);
  cfg.output_dir = detail::get_or<std::string>(j, "output_dir", "out");
  if (cfg.threads < 1) throw ValidationError("config: threads must be >= 1");

  if (j.contains("model")) {
    const Json& m = j.at("model");
    detail::require_keys(m, "model", {"variant", "sigma", "delta", "mu", "diffusion_coeff"});
    cfg.model.variant = detail::parse_variant(detail::get_or<std::string>(m, "variant", "dispersive-structural"));
    cfg.model.sigma = detail::get_or<double>(m, "sigma", 1.0);
    cfg.model.delta = detail::get_or<double>(m, "delta", 0.0);
    cfg.model.mu = detail::get_or<double>(m, "mu", 2.0);
    cfg.model.diffusion_coeff = detail::get_or<double>(m, "diffusion_coeff", 1.0);
  }
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    detail::require_keys(g, "grid", {"dim", "points", "half_width"});
    cfg.grid.dim = detail::get_or<int>(g, "dim", 1);
    cfg.grid.points = detail::get_or<int>(g, "points", 64);
    cfg.grid.half_width = detail::get_or<double>(g, "half_width", 10.0);
  }
  if (j.contains("sim")) {
    const Json& s = j.at("sim");
    detail::require_keys(s, "sim",
                         {"p", "dt", "t_end", "amplitude", "dealias_fraction", "blowup_factor",
                          "snapshot_stride", "nonlinear", "store_snapshots", "project_zero_mode"});
    cfg.sim.p = detail::get_or<double>(s, "p", 2.0);
    cfg.sim.dt = detail::get_or<double>(s, "dt", 0.01);
    cfg.sim.t_end = detail::get_or<double>(s, "t_end", 1.0);
    cfg.sim.amplitude = detail::get_or<double>(s, "amplitude", 1.0);
    cfg.sim.dealias_fraction = detail::get_or<double>(s, "dealias_fraction", 2.0 / 3.0);
    cfg.sim.blowup_factor = detail::get_or<double>(s, "blowup_factor", 1e6);
    cfg.sim.snapshot_stride = detail::get_or<int>(s, "snapshot_stride", 1);
    cfg.sim.nonlinear = detail::get_or<bool>(s, "nonlinear", true);
    cfg.sim.store_snapshots = detail::get_or<bool>(s, "store_snapshots", false);
    cfg.sim.project_zero_mode = detail::get_or<bool>(s, "project_zero_mode", false);
  }
  if (j.contains("initial_data")) {
    const Json& d = j.at("initial_data");
    detail::require_keys(d, "initial_data",
                         {"kind", "width", "amplitude", "center", "radius", "seed", "cutoff"});
    const std::string k = detail::get_or<std::string>(d, "kind", "gaussian");
    if (k == "gaussian") cfg.initial_data.kind = InitialDataSpec::Kind::Gaussian;
    else if (k == "bump") cfg.initial_data.kind = InitialDataSpec::Kind::Bump;
    else if (k == "random-smooth") cfg.initial_data.kind = InitialDataSpec::Kind::RandomSmooth;
    else throw ValidationError("config: unknown initial_data kind '" + k + "'");
    cfg.initial_data.width = detail::get_or<double>(d, "width", 1.0);
    cfg.initial_data.amplitude = detail::get_or<double>(d, "amplitude", 1.0);
    cfg.initial_data.radius = detail::get_or<double>(d, "radius", 1.0);
    cfg.initial_data.seed = detail::get_or<std::uint64_t>(d, "seed", 1);
    cfg.initial_data.cutoff = detail::get_or<int>(d, "cutoff", 4);
    if (d.contains("center")) {
      const auto c = d.at("center").get<std::vector<double>>();
      if (c.size() > 3) throw ValidationError("config: center has more than 3 components");
      for (std::size_t i = 0; i < c.size(); ++i) cfg.initial_data.center[i] = c[i];
    }
  }
  if (j.contains("exponent_table")) {
    const Json& e = j.at("exponent_table");
    detail::require_keys(e, "exponent_table", {"n_min", "n_max", "m_reg"});
    cfg.n_min = detail::get_or<int>(e, "n_min", 1);
    cfg.n_max = detail::get_or<int>(e, "n_max", 6);
    cfg.m_reg = detail::get_or<double>(e, "m_reg", 1.0);
  }
  if (j.contains("functional_sweep")) {
    const Json& f = j.at("functional_sweep");
    detail::require_keys(f, "functional_sweep", {"radii", "p"});
    if (f.contains("radii")) cfg.sweep_radii = f.at("radii").get<std::vector<double>>();
    cfg.functional_p = detail::get_or<double>(f, "p", 2.0);
  }
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("config: cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("config: JSON parse error: ") + e.what());
  }
  return parse_config(j);
}

/// Full precondition walk without execution. Every violation is reported with
/// the name of the condition it breaks.
inline std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
  std::vector<std::string> issues;
  const auto check = [&](bool ok, const std::string& msg) {
    if (!ok) issues.push_back(msg);
  };

  try {
    cfg.model.validate();
  } catch (const ValidationError& e) {
    issues.push_back(std::string("model invariant: ") + e.what());
  }

  const bool needs_grid = cfg.kind == ExperimentKind::LinearDecay ||
                          cfg.kind == ExperimentKind::NonlinearRun ||
                          cfg.kind == ExperimentKind::BlowupFunctionalSweep;
  if (needs_grid) {
    try {
      Grid g(cfg.grid.dim, cfg.grid.points, cfg.grid.half_width);
      SimConfig sc{g, cfg.model.sigma, cfg.model.delta, cfg.sim.p, cfg.sim.dt, cfg.sim.t_end,
                   cfg.sim.amplitude, cfg.sim.dealias_fraction, cfg.sim.blowup_factor,
                   cfg.sim.snapshot_stride, cfg.sim.nonlinear, cfg.sim.store_snapshots};
      sc.project_zero_mode = cfg.sim.project_zero_mode;
      sc.validate();
    } catch (const ValidationError& e) {
      issues.push_back(std::string("simulation precondition: ") + e.what());
    }
    if (cfg.initial_data.kind == InitialDataSpec::Kind::Bump)
      check(cfg.initial_data.radius > 0.0 && cfg.initial_data.radius < cfg.grid.half_width,
            "initial data: bump radius must lie in (0, half_width)");
    check(cfg.initial_data.amplitude >= 0.0, "initial data: amplitude must be nonnegative");
  }

  if (cfg.kind == ExperimentKind::ExponentTable) {
    check(cfg.n_min >= 1 && cfg.n_min <= cfg.n_max, "exponent table: need 1 <= n_min <= n_max");
    check(cfg.m_reg >= 1.0 && cfg.m_reg <= 2.0, "data-regularity condition: m must lie in [1, 2]");
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      check(double(n) > cfg.model.sigma,
            "global-existence bound requires n > sigma: violated at n = " + std::to_string(n));
      check(double(n) > 2.0 * cfg.model.delta,
            "blow-up bound requires n > 2delta: violated at n = " + std::to_string(n));
    }
  }

  if (cfg.kind == ExperimentKind::BlowupFunctionalSweep) {
    check(cfg.functional_p > 1.0, "functional sweep: p must be > 1");
    check(!cfg.sweep_radii.empty(), "functional sweep: radii list must be nonempty");
    for (double r : cfg.sweep_radii) {
      check(r > 0.0, "functional sweep: radii must be positive");
      const double horizon = std::pow(r, 2.0 * cfg.model.delta);
      check(horizon <= cfg.sim.t_end + 1e-12,
            "functional sweep: trajectory must cover R^alpha; R = " + std::to_string(r) +
                " needs t_end >= " + std::to_string(horizon));
    }
    check(cfg.sim.store_snapshots, "functional sweep: sim.store_snapshots must be true");
  }

  return issues;
}

}  // namespace fracwave
