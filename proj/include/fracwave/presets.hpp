#pragma once

// Shipped experiment presets. Each corresponds to one of the studies the
// acceptance suite pins down, so `fracwave presets --emit DIR` followed by
// `fracwave run --config DIR/<name>.json` reproduces those tables.

#include <string>
#include <vector>

namespace fracwave {

struct Preset {
  const char* name;
  const char* description;
  const char* json;
};

inline const std::vector<Preset>& shipped_presets() {
  static const std::vector<Preset> presets = {
      {"exponent-table",
       "critical exponents, gap widths and dimension thresholds for n = 3..6",
       R"({
  "experiment": "exponent-table",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "exponent_table": {"n_min": 3, "n_max": 6, "m_reg": 1.0},
  "output_dir": "out/exponent-table"
})"},
      {"linear-decay",
       "linear 3d run with norm history, majorant decay slopes and multiplier domination",
       R"({
  "experiment": "linear-decay",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "grid": {"dim": 3, "points": 32, "half_width": 16.0},
  "sim": {"p": 2.0, "dt": 0.1, "t_end": 20.0, "amplitude": 1.0, "snapshot_stride": 2,
          "nonlinear": false},
  "initial_data": {"kind": "gaussian", "width": 2.0, "amplitude": 1.0},
  "output_dir": "out/linear-decay"
})"},
      {"nonlinear-supercritical",
       "64^3 supercritical run (p = 2.5 > 1.75): small data decays globally",
       R"({
  "experiment": "nonlinear-run",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "grid": {"dim": 3, "points": 64, "half_width": 16.0},
  "sim": {"p": 2.5, "dt": 0.05, "t_end": 20.0, "amplitude": 0.01, "snapshot_stride": 4,
          "project_zero_mode": true},
  "initial_data": {"kind": "gaussian", "width": 2.0, "amplitude": 1.0},
  "output_dir": "out/nonlinear-supercritical"
})"},
      {"nonlinear-subcritical-blowup",
       "64^3 subcritical run (p = 1.2 < 1.4): positive bump data blows up in finite time",
       R"({
  "experiment": "nonlinear-run",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "grid": {"dim": 3, "points": 64, "half_width": 16.0},
  "sim": {"p": 1.2, "dt": 0.02, "t_end": 30.0, "amplitude": 1.0, "snapshot_stride": 5},
  "initial_data": {"kind": "bump", "radius": 6.0, "amplitude": 1.0},
  "output_dir": "out/nonlinear-subcritical-blowup"
})"},
      {"inequality-suite",
       "interpolation-ratio, convolution-inequality, cutoff and scaling-identity tables",
       R"({
  "experiment": "inequality-suite",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "output_dir": "out/inequality-suite"
})"},
      {"blowup-functional-sweep",
       "R-sweep of the weak-solution functionals on a stored linear trajectory",
       R"({
  "experiment": "blowup-functional-sweep",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "grid": {"dim": 1, "points": 2048, "half_width": 100.0},
  "sim": {"p": 2.0, "dt": 0.005, "t_end": 4.1, "amplitude": 1.0, "snapshot_stride": 2,
          "nonlinear": false, "store_snapshots": true},
  "initial_data": {"kind": "gaussian", "width": 5.0, "amplitude": 1.0},
  "functional_sweep": {"radii": [4.0, 8.0, 16.0], "p": 2.0},
  "output_dir": "out/blowup-functional-sweep"
})"},
      {"regime-classify",
       "diffusion/oscillation classification, roots and validity radii across the catalogue",
       R"({
  "experiment": "regime-classify",
  "model": {"variant": "dispersive-structural", "sigma": 1.0, "delta": 0.25},
  "output_dir": "out/regime-classify"
})"},
  };
  return presets;
}

}  // namespace fracwave
