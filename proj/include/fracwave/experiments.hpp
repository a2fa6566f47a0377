#pragma once

// Experiment drivers tying the modules together: build initial data, run the
// requested study, and emit CSV tables + SVG plots + a manifest that records
// every parameter and the module operation behind every column.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <thread>

#include "fracwave/analysis.hpp"
#include "fracwave/config.hpp"
#include "fracwave/csv.hpp"
#include "fracwave/exponents.hpp"
#include "fracwave/functionals.hpp"
#include "fracwave/svg.hpp"
#include "fracwave/version.hpp"

namespace fracwave {

struct ReportBundle {
  std::string directory;
  std::vector<std::string> files;
  Json manifest;
};

namespace detail {

/// Deterministic task fan-out: results land in preassigned slots, so the
/// output is independent of scheduling.
template <class F>
void parallel_for_index(std::size_t count, int threads, const F& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(threads, int(count));
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

inline PhysicalField build_initial_data(const Grid& g, const InitialDataSpec& d) {
  switch (d.kind) {
    case InitialDataSpec::Kind::Gaussian:
      return PhysicalField::sample(g, [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int k = 0; k < g.dim(); ++k) {
          const double y = x[k] - d.center[k];
          r2 += y * y;
        }
        return d.amplitude * std::exp(-r2 / (2.0 * d.width * d.width));
      });
    case InitialDataSpec::Kind::Bump:
      return PhysicalField::sample(g, [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int k = 0; k < g.dim(); ++k) r2 += x[k] * x[k];
        const double s2 = r2 / (d.radius * d.radius);
        if (s2 >= 1.0) return 0.0;
        return d.amplitude * std::exp(1.0 - 1.0 / (1.0 - s2));
      });
    case InitialDataSpec::Kind::RandomSmooth: {
      // random low-frequency cosine sum; deterministic in the seed
      Rng rng(d.seed);
      struct Mode { std::array<int, 3> k; double amp, phase; };
      std::vector<Mode> modes;
      const int c = d.cutoff;
      std::array<int, 3> k{0, 0, 0};
      const int kmax2 = c * c;
      const auto push = [&](std::array<int, 3> kk) {
        int q = 0;
        for (int dd = 0; dd < g.dim(); ++dd) q += kk[dd] * kk[dd];
        if (q == 0 || q > kmax2) return;
        modes.push_back({kk, rng.uniform(-1.0, 1.0), rng.uniform(0.0, 2.0 * pi)});
      };
      if (g.dim() == 1)
        for (k[0] = 1; k[0] <= c; ++k[0]) push(k);
      else if (g.dim() == 2)
        for (k[0] = -c; k[0] <= c; ++k[0])
          for (k[1] = 0; k[1] <= c; ++k[1]) push(k);
      else
        for (k[0] = -c; k[0] <= c; ++k[0])
          for (k[1] = -c; k[1] <= c; ++k[1])
            for (k[2] = 0; k[2] <= c; ++k[2]) push(k);
      PhysicalField f = PhysicalField::sample(g, [&](const std::array<double, 3>& x) {
        double v = 0.0;
        for (const auto& m : modes) {
          double phase = m.phase;
          for (int dd = 0; dd < g.dim(); ++dd) phase += pi * m.k[dd] * x[dd] / g.half_width();
          v += m.amp * std::cos(phase);
        }
        return v;
      });
      double peak = 0.0;
      for (const auto& v : f.data()) peak = std::max(peak, std::abs(v));
      if (peak > 0.0)
        for (auto& v : f.data()) v *= d.amplitude / peak;
      return f;
    }
  }
  throw ValidationError("initial data: unknown kind");
}

inline Json column_manifest(const std::vector<std::pair<std::string, std::string>>& cols) {
  Json arr = Json::array();
  for (const auto& [name, op] : cols) arr.push_back(Json{{"name", name}, {"op", op}});
  return arr;
}

class BundleWriter {
public:
  BundleWriter(const ExperimentConfig& cfg) : cfg_(cfg), started_(std::chrono::steady_clock::now()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.output_dir);
    bundle_.directory = cfg.output_dir;
    bundle_.manifest["config"] = cfg.raw;
    bundle_.manifest["seed"] = cfg.seed;
    bundle_.manifest["threads"] = cfg.threads;
    bundle_.manifest["version"] = version_string;
    bundle_.manifest["tables"] = Json::array();
  }

  void add_table(const std::string& file, const CsvTable& table,
                 const std::vector<std::pair<std::string, std::string>>& column_ops) {
    const std::string path = bundle_.directory + "/" + file;
    table.write(path);
    bundle_.files.push_back(file);
    bundle_.manifest["tables"].push_back(
        Json{{"file", file}, {"rows", table.row_count()}, {"columns", column_manifest(column_ops)}});
  }

  void add_plot(const std::string& file, const std::string& title,
                const std::vector<SvgSeries>& series, bool logx, bool logy) {
    write_svg_plot(bundle_.directory + "/" + file, title, series, logx, logy);
    bundle_.files.push_back(file);
  }

  ReportBundle finish() {
    const auto wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started_);
    bundle_.manifest["wall_clock_ms"] = wall.count();
    std::ofstream out(bundle_.directory + "/manifest.json", std::ios::binary);
    if (!out) throw IoError("cannot write manifest");
    out << bundle_.manifest.dump(2) << "\n";
    bundle_.files.push_back("manifest.json");
    return bundle_;
  }

private:
  const ExperimentConfig& cfg_;
  std::chrono::steady_clock::time_point started_;
  ReportBundle bundle_;
};

inline SimConfig to_sim_config(const ExperimentConfig& cfg) {
  Grid g(cfg.grid.dim, cfg.grid.points, cfg.grid.half_width);
  SimConfig sc{g, cfg.model.sigma, cfg.model.delta, cfg.sim.p, cfg.sim.dt, cfg.sim.t_end,
               cfg.sim.amplitude, cfg.sim.dealias_fraction, cfg.sim.blowup_factor,
               cfg.sim.snapshot_stride, cfg.sim.nonlinear, cfg.sim.store_snapshots};
  sc.project_zero_mode = cfg.sim.project_zero_mode;
  return sc;
}

inline void write_trajectory_tables(BundleWriter& writer, const Trajectory& traj,
                                    const ExperimentConfig& cfg) {
  CsvTable norms({"t", "l2", "h_delta", "h_sigma_half", "velocity_l2", "l_p", "l_2p"});
  std::vector<SvgSeries> series(2);
  series[0].label = "l2";
  series[1].label = "velocity_l2";
  for (const auto& s : traj.norms) {
    norms.add_row(std::vector<double>{s.t, s.l2, s.hs_delta, s.hs_sigma_half, s.vel_l2, s.lq_p, s.lq_2p});
    if (s.l2 > 0.0) series[0].points.emplace_back(1.0 + s.t, s.l2);
    if (s.vel_l2 > 0.0) series[1].points.emplace_back(1.0 + s.t, s.vel_l2);
  }
  writer.add_table("norms.csv", norms,
                   {{"t", "run_simulation"},
                    {"l2", "lp_norm(q=2)"},
                    {"h_delta", "sobolev_seminorm(s=delta)"},
                    {"h_sigma_half", "sobolev_seminorm(s=sigma/2)"},
                    {"velocity_l2", "lp_norm(q=2)"},
                    {"l_p", "lp_norm(q=p)"},
                    {"l_2p", "lp_norm(q=2p)"}});

  CsvTable verdict({"verdict", "time"});
  verdict.add_row({std::string(to_string(traj.verdict.kind)), format_number(traj.verdict.time)});
  writer.add_table("verdict.csv", verdict,
                   {{"verdict", "detect_blowup"}, {"time", "detect_blowup"}});

  const auto w = decay_weights(cfg.grid.dim, cfg.model.sigma, cfg.model.delta);
  if (traj.verdict.kind == VerdictKind::CompletedDecaying ||
      traj.verdict.kind == VerdictKind::CompletedBounded) {
    const auto xt = xt_norm(traj, w);
    CsvTable xtt({"xt_value", "sup_l2", "sup_energy", "sup_velocity", "w_u", "w_energy",
                  "w_velocity", "solution_decay_guaranteed"});
    xtt.add_row(std::vector<double>{xt.value, xt.sup_l2, xt.sup_energy, xt.sup_velocity, w.w_u,
                                    w.w_energy, w.w_velocity,
                                    w.solution_decay_guaranteed ? 1.0 : 0.0});
    writer.add_table("xt_norm.csv", xtt,
                     {{"xt_value", "xt_norm"},
                      {"sup_l2", "xt_norm"},
                      {"sup_energy", "xt_norm"},
                      {"sup_velocity", "xt_norm"},
                      {"w_u", "decay_weights"},
                      {"w_energy", "decay_weights"},
                      {"w_velocity", "decay_weights"},
                      {"solution_decay_guaranteed", "decay_weights"}});
  }
  if (!series[0].points.empty())
    writer.add_plot("norms.svg", "norm history (log-log vs 1+t)", series, true, true);
}

}  // namespace detail

inline ReportBundle run_exponent_table(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);
  const Rat sigma = rat_from_double(cfg.model.sigma);
  const Rat delta = rat_from_double(cfg.model.delta);
  CsvTable table({"n", "p_blowup", "p_global", "gap_width"});
  CsvTable extra({"n", "p_fujita_m", "p_structural", "osc_gap_lower", "osc_gap_upper", "gap_empty"});
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    ExponentQuery q{n, sigma, delta, rat_from_double(cfg.m_reg), 2};
    const Rat lo = blowup_upper_bound(q);
    const Rat hi = global_lower_bound(q);
    table.add_row(std::vector<double>{double(n), to_double(lo), to_double(hi), to_double(hi - lo)});
    const auto gp = gap(q);
    extra.add_row(std::vector<double>{double(n), to_double(fujita_m(q)),
                                      to_double(fujita_structural(q)), to_double(gp.lower),
                                      to_double(gp.upper), gp.main_empty ? 1.0 : 0.0});
  }
  writer.add_table("exponent_table.csv", table,
                   {{"n", "input"},
                    {"p_blowup", "blowup_upper_bound"},
                    {"p_global", "global_lower_bound"},
                    {"gap_width", "gap"}});
  writer.add_table("exponent_extra.csv", extra,
                   {{"n", "input"},
                    {"p_fujita_m", "fujita_m"},
                    {"p_structural", "fujita_structural"},
                    {"osc_gap_lower", "gap"},
                    {"osc_gap_upper", "gap"},
                    {"gap_empty", "gap"}});

  CsvTable nb({"sigma", "nbar", "interval_lo", "interval_hi", "strictly_inside"});
  for (double s : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    const auto r = nbar(s);
    nb.add_row(std::vector<double>{s, r.value, r.interval_lo, r.interval_hi,
                                   r.strictly_inside ? 1.0 : 0.0});
  }
  writer.add_table("nbar.csv", nb,
                   {{"sigma", "input"},
                    {"nbar", "nbar"},
                    {"interval_lo", "nbar"},
                    {"interval_hi", "nbar"},
                    {"strictly_inside", "nbar"}});
  return writer.finish();
}

inline ReportBundle run_linear_decay(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);
  SimConfig sc = detail::to_sim_config(cfg);
  sc.nonlinear = false;
  const PhysicalField u1 = detail::build_initial_data(sc.grid, cfg.initial_data);
  const Trajectory traj = run_simulation(sc, u1);
  detail::write_trajectory_tables(writer, traj, cfg);

  // majorant decay table and slope fits on t in [1e2, 1e4]
  const auto w = decay_weights(cfg.grid.dim, cfg.model.sigma, cfg.model.delta);
  const int n = cfg.grid.dim;
  const double sg = cfg.model.sigma, dl = cfg.model.delta;
  const std::vector<std::pair<double, double>> pairs = {
      {-sg, 2.0 * dl}, {0.0, 2.0 * dl}, {-sg + 2.0 * dl, 2.0 * dl}};
  const std::vector<double> expected = {w.w_u, w.w_energy, w.w_delta};
  const auto ts = log_spaced(default_fit_window_lo, default_fit_window_hi, 40);

  CsvTable maj({"a", "b", "t", "Q"});
  CsvTable slopes({"a", "b", "fitted_slope", "expected_slope", "max_residual"});
  std::vector<SvgSeries> series;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (!(n + 2.0 * a > 0.0)) continue;  // divergent majorant: no decay guaranteed
    std::vector<std::pair<double, double>> samples;
    for (double t : ts) {
      const double q = majorant_norm_decay(a, b, n, t);
      maj.add_row(std::vector<double>{a, b, t, q});
      samples.emplace_back(t, q);
    }
    const auto fit = fit_decay_slope(samples, default_fit_window_lo, default_fit_window_hi);
    slopes.add_row(std::vector<double>{a, b, fit.slope, -expected[i], fit.max_residual});
    series.push_back({"(a=" + format_number(a) + ")", samples});
  }
  writer.add_table("majorant.csv", maj,
                   {{"a", "input"}, {"b", "input"}, {"t", "input"}, {"Q", "majorant_norm_decay"}});
  writer.add_table("majorant_slopes.csv", slopes,
                   {{"a", "input"},
                    {"b", "input"},
                    {"fitted_slope", "fit_decay_slope"},
                    {"expected_slope", "decay_weights"},
                    {"max_residual", "fit_decay_slope"}});
  writer.add_plot("majorant.svg", "majorant norms", series, true, true);

  // true-multiplier domination samples
  if (n + 2.0 * -sg > 0.0) {
    CsvTable dom({"t", "multiplier_l2", "majorant_Q"});
    for (double t : log_spaced(1e-2, 1e3, 30))
      dom.add_row(std::vector<double>{t, multiplier_lowfreq_l2(sg, dl, n, t),
                                      majorant_norm_decay(-sg, 2.0 * dl, n, t)});
    writer.add_table("domination.csv", dom,
                     {{"t", "input"},
                      {"multiplier_l2", "multiplier_lowfreq_l2"},
                      {"majorant_Q", "majorant_norm_decay"}});
  }
  return writer.finish();
}

inline ReportBundle run_nonlinear(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);
  const SimConfig sc = detail::to_sim_config(cfg);
  const PhysicalField u1 = detail::build_initial_data(sc.grid, cfg.initial_data);
  const Trajectory traj = run_simulation(sc, u1);
  detail::write_trajectory_tables(writer, traj, cfg);
  return writer.finish();
}

inline ReportBundle run_inequality_suite(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);

  // Gagliardo-Nirenberg dilation table
  CsvTable gn({"n", "s", "q", "lambda", "theta", "ratio"});
  const std::vector<std::array<double, 3>> gn_cases = {{1, 1, 4}, {2, 1, 4}, {1, 0.5, 3}};
  for (const auto& c : gn_cases) {
    const int n = int(c[0]);
    // fractional orders carry a |xi| kink at the origin whose quadrature
    // error falls off like (1/L)^2; they get the wide box
    const bool frac = c[1] != std::floor(c[1]);
    const Grid g(n, n == 1 ? (frac ? 16384 : 1024) : 256, n == 1 ? (frac ? 800.0 : 30.0) : 15.0);
    for (double lambda : {0.5, 1.0, 2.0}) {
      const PhysicalField f = PhysicalField::sample(g, [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int d = 0; d < n; ++d) r2 += x[d] * x[d];
        return std::exp(-lambda * lambda * r2);
      });
      const auto chk = gn_ratio(f, c[2], c[1]);
      gn.add_row(std::vector<double>{double(n), c[1], c[2], lambda, chk.theta, chk.ratio});
    }
  }
  writer.add_table("gn_ratio.csv", gn,
                   {{"n", "input"},
                    {"s", "input"},
                    {"q", "input"},
                    {"lambda", "input"},
                    {"theta", "gn_ratio"},
                    {"ratio", "gn_ratio"}});

  // weighted convolution inequality curves
  CsvTable conv({"a", "b", "t", "ratio"});
  std::vector<SvgSeries> conv_series;
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1.5, 0.5}, {2, 2}, {0.5, 1.5}}) {
    const auto chk = integral_inequality_ratio(a, b, log_spaced(1.0, 1e4, 40));
    SvgSeries s{"(a=" + format_number(a) + ",b=" + format_number(b) + ")", {}};
    for (const auto& [t, r] : chk.ratio_curve) {
      conv.add_row(std::vector<double>{a, b, t, r});
      s.points.emplace_back(t, r);
    }
    conv_series.push_back(std::move(s));
  }
  writer.add_table("integral_inequality.csv", conv,
                   {{"a", "input"}, {"b", "input"}, {"t", "input"}, {"ratio", "integral_inequality_ratio"}});
  writer.add_plot("integral_inequality.svg", "convolution inequality ratio", conv_series, true, false);

  // cutoff condition
  CsvTable eta({"p", "vanish_power", "max_expression", "diverges"});
  for (double p : {1.2, 2.0, 3.0}) {
    const auto cut = SmoothstepCutoff::for_nonlinearity(p);
    const auto rep = eta_check(cut, p);
    eta.add_row(std::vector<double>{p, double(cut.vanish_power), rep.max_expression,
                                    rep.diverges ? 1.0 : 0.0});
  }
  writer.add_table("eta_condition.csv", eta,
                   {{"p", "input"},
                    {"vanish_power", "eta_check"},
                    {"max_expression", "eta_check"},
                    {"diverges", "eta_check"}});

  // scaling identity of the fractional Laplacian under dilation
  CsvTable sc({"rho", "R", "max_rel_error"});
  {
    const Grid g(1, 4096, 200.0);
    const PhysicalField probe = PhysicalField::sample(
        g, [](const std::array<double, 3>& x) { return std::exp(-x[0] * x[0] / 100.0); });
    for (const auto& [rho, R] :
         std::vector<std::pair<double, double>>{{1.0, 2.0}, {1.0, 4.0}, {0.5, 2.0}, {0.5, 4.0}}) {
      TestFunctionSpec spec = TestFunctionSpec::standard(1, 0.25, R);
      const auto chk = scaling_identity_check(rho, spec, probe);
      sc.add_row(std::vector<double>{rho, R, chk.max_rel_error});
    }
  }
  writer.add_table("scaling_identity.csv", sc,
                   {{"rho", "input"}, {"R", "input"}, {"max_rel_error", "scaling_identity_check"}});
  return writer.finish();
}

inline ReportBundle run_blowup_functional_sweep(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);
  SimConfig sc = detail::to_sim_config(cfg);
  sc.store_snapshots = true;
  const PhysicalField u1 = detail::build_initial_data(sc.grid, cfg.initial_data);
  const Trajectory traj = run_simulation(sc, u1);

  const double p = cfg.functional_p;
  const auto cutoff = SmoothstepCutoff::for_nonlinearity(p);
  const double pprime = p / (p - 1.0);
  const int n = cfg.grid.dim;
  const double sg = cfg.model.sigma, dl = cfg.model.delta;

  CsvTable table({"R", "I_R", "I_Rt", "J1", "J2", "J3", "J4", "data_term", "residual", "j2_ratio"});
  std::vector<FunctionalReport> reps(cfg.sweep_radii.size());
  detail::parallel_for_index(cfg.sweep_radii.size(), cfg.threads, [&](std::size_t i) {
    const TestFunctionSpec spec = TestFunctionSpec::standard(n, dl, cfg.sweep_radii[i]);
    reps[i] = compute_functionals(traj, spec, cutoff, p);
  });
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    const double R = cfg.sweep_radii[i];
    const double j2_ratio =
        r.I_R > 0.0
            ? std::abs(r.J2) * std::pow(r.I_R, -1.0 / p) * std::pow(R, 2.0 * sg - (n + 2.0 * dl) / pprime)
            : 0.0;
    table.add_row(std::vector<double>{R, r.I_R, r.I_Rt, r.J1, r.J2, r.J3, r.J4, r.data_term,
                                      r.residual, j2_ratio});
  }
  writer.add_table("functionals.csv", table,
                   {{"R", "input"},
                    {"I_R", "compute_functionals"},
                    {"I_Rt", "compute_functionals"},
                    {"J1", "compute_functionals"},
                    {"J2", "compute_functionals"},
                    {"J3", "compute_functionals"},
                    {"J4", "compute_functionals"},
                    {"data_term", "compute_functionals"},
                    {"residual", "compute_functionals"},
                    {"j2_ratio", "compute_functionals"}});

  const auto led = blowup_criterion(n, rat_from_double(dl), rat_from_double(p));
  CsvTable crit({"n", "delta", "p", "dominant", "blowup_condition_met", "expo_J1", "expo_J2",
                 "expo_J3", "expo_J4"});
  crit.add_row(std::vector<double>{double(n), dl, p, to_double(led.dominant),
                                   led.blowup_condition_met ? 1.0 : 0.0, to_double(led.expo_J1),
                                   to_double(led.expo_J2), to_double(led.expo_J3),
                                   to_double(led.expo_J4)});
  writer.add_table("criterion.csv", crit,
                   {{"n", "input"},
                    {"delta", "input"},
                    {"p", "input"},
                    {"dominant", "blowup_criterion"},
                    {"blowup_condition_met", "blowup_criterion"},
                    {"expo_J1", "blowup_criterion"},
                    {"expo_J2", "blowup_criterion"},
                    {"expo_J3", "blowup_criterion"},
                    {"expo_J4", "blowup_criterion"}});
  return writer.finish();
}

inline ReportBundle run_regime_classify(const ExperimentConfig& cfg) {
  detail::BundleWriter writer(cfg);
  CsvTable table({"variant", "sigma", "delta", "mu", "regime", "a_exponent", "b_exponent",
                  "validity_radius", "root1_re", "root1_im", "multiplier_t1"});
  const double sg = cfg.model.sigma;
  const std::vector<ModelSpec> zoo = {
      {ModelVariant::AnomalousDiffusion, sg, 0.0, 2.0, cfg.model.diffusion_coeff},
      {ModelVariant::FrictionalDamped, sg, 0.0},
      {ModelVariant::EffectiveStructural, sg, 0.25 * sg},
      {ModelVariant::CriticalStructural, sg, 0.5 * sg, std::max(2.0, cfg.model.mu)},
      {ModelVariant::Schrodinger, sg, 0.0},
      {ModelVariant::FreeWave, sg, 0.0},
      {ModelVariant::GeneralizedSchrodinger, sg, 0.25 * sg},
      {ModelVariant::DispersiveStructural, sg, 0.25 * sg},
      {ModelVariant::NonEffectiveStructural, sg, 0.75 * sg},
  };
  for (const auto& m : zoo) {
    const auto regime = classify_regime(m);
    const auto region = validity_region(m);
    const double r_probe = region.unrestricted() ? 0.5 : 0.5 * region.radius;
    const auto roots = characteristic_roots(m, r_probe);
    const Complex mult = solution_multiplier(m, 1.0, r_probe);
    table.add_row({std::string(to_string(m.variant)), format_number(m.sigma),
                   format_number(m.delta), format_number(m.mu), std::string(to_string(regime.kind)),
                   format_number(regime.a_exponent), format_number(regime.b_exponent),
                   format_number(region.radius), format_number(roots.first.real()),
                   format_number(roots.first.imag()), format_number(std::abs(mult))});
  }
  writer.add_table("regimes.csv", table,
                   {{"variant", "input"},
                    {"sigma", "input"},
                    {"delta", "input"},
                    {"mu", "input"},
                    {"regime", "classify_regime"},
                    {"a_exponent", "classify_regime"},
                    {"b_exponent", "classify_regime"},
                    {"validity_radius", "validity_region"},
                    {"root1_re", "characteristic_roots"},
                    {"root1_im", "characteristic_roots"},
                    {"multiplier_t1", "solution_multiplier"}});
  return writer.finish();
}

inline ReportBundle run_experiment(const ExperimentConfig& cfg) {
  const auto issues = validate_config(cfg);
  if (!issues.empty()) {
    std::string msg = "configuration invalid:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw ValidationError(msg);
  }
  switch (cfg.kind) {
    case ExperimentKind::LinearDecay: return run_linear_decay(cfg);
    case ExperimentKind::NonlinearRun: return run_nonlinear(cfg);
    case ExperimentKind::ExponentTable: return run_exponent_table(cfg);
    case ExperimentKind::InequalitySuite: return run_inequality_suite(cfg);
    case ExperimentKind::BlowupFunctionalSweep: return run_blowup_functional_sweep(cfg);
    case ExperimentKind::RegimeClassify: return run_regime_classify(cfg);
  }
  throw ValidationError("unknown experiment kind");
}

}  // namespace fracwave
