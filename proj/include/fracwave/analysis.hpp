#pragma once

// Decay-rate fitting, the weighted sup norm over a trajectory, and the
// numerical sides of the Gagliardo-Nirenberg and weighted convolution
// inequalities. Unquantified "up to a constant" bounds are realized as
// boundedness-of-ratio checks; no specific constants are asserted.

#include <cmath>
#include <utility>
#include <vector>

#include "fracwave/quadrature.hpp"
#include "fracwave/solver.hpp"

namespace fracwave {

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double t_min = 0.0, t_max = 0.0;
  double max_residual = 0.0;
  std::size_t samples_used = 0;
};

/// Least-squares line of log(norm) against log(1+t) over the window.
inline DecayFit fit_decay_slope(const std::vector<std::pair<double, double>>& samples,
                                double t_min, double t_max) {
  if (!(t_min < t_max)) throw ValidationError("fit_decay_slope: window must satisfy t_min < t_max");
  std::vector<std::pair<double, double>> pts;
  for (const auto& [t, v] : samples) {
    if (t < t_min || t > t_max) continue;
    if (!(v > 0.0)) throw ValidationError("fit_decay_slope: nonpositive norm inside the fit window");
    pts.emplace_back(std::log1p(t), std::log(v));
  }
  if (pts.size() < 10) throw ValidationError("fit_decay_slope: needs at least 10 samples in the window");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) { sx += x; sy += y; sxx += x * x; sxy += x * y; }
  const double n = double(pts.size());
  const double denom = n * sxx - sx * sx;
  DecayFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.t_min = t_min;
  fit.t_max = t_max;
  fit.samples_used = pts.size();
  for (const auto& [x, y] : pts)
    fit.max_residual = std::max(fit.max_residual, std::abs(y - (fit.intercept + fit.slope * x)));
  return fit;
}

/// Default slope-fit window; below 1e2 the (1+t) offset biases the slope.
inline constexpr double default_fit_window_lo = 1e2;
inline constexpr double default_fit_window_hi = 1e4;

struct XTNormReport {
  double value = 0.0;       // sum of the three per-term suprema
  double sup_l2 = 0.0;      // sup (1+t)^{w_u} ||u||_L2
  double sup_energy = 0.0;  // sup (1+t)^{w_energy} ||(-Delta)^{sigma/2} u||_L2
  double sup_velocity = 0.0;
  DecayWeights weights{};
};

inline XTNormReport xt_norm(const Trajectory& traj, const DecayWeights& weights) {
  if (traj.norms.empty()) throw ValidationError("xt_norm: trajectory has no recorded norms");
  XTNormReport r;
  r.weights = weights;
  for (const auto& s : traj.norms) {
    const double g = 1.0 + s.t;
    r.sup_l2 = std::max(r.sup_l2, std::pow(g, weights.w_u) * s.l2);
    r.sup_energy = std::max(r.sup_energy, std::pow(g, weights.w_energy) * s.hs_sigma_half);
    r.sup_velocity = std::max(r.sup_velocity, std::pow(g, weights.w_velocity) * s.vel_l2);
  }
  r.value = r.sup_l2 + r.sup_energy + r.sup_velocity;
  return r;
}

struct GNCheck {
  double q = 0.0;
  double s = 0.0;
  double theta = 0.0;  // (n/s)(1/2 - 1/q)
  double ratio = 0.0;  // ||g||_q / ( |g|_{H^s}^theta ||g||_2^{1-theta} )
};

/// Interpolation-ratio side of the fractional Gagliardo-Nirenberg inequality.
/// theta is the unique scale-balancing exponent, so the ratio is invariant
/// under dilation and under positive scalar multiples of g.
inline GNCheck gn_ratio(const PhysicalField& g, double q, double s) {
  if (!(s > 0.0)) throw ValidationError("gn_ratio: s must be positive");
  if (!(q > 1.0)) throw ValidationError("gn_ratio: q must be > 1");
  const int n = g.grid().dim();
  GNCheck c;
  c.q = q;
  c.s = s;
  c.theta = (n / s) * (0.5 - 1.0 / q);
  if (c.theta < 0.0 || c.theta > 1.0)
    throw ValidationError("gn_ratio: theta outside [0,1], inequality inapplicable");
  const double l2 = lp_norm(g, 2.0);
  if (!(l2 > 0.0)) throw ValidationError("gn_ratio: field must be nonzero");
  const double hs = sobolev_seminorm(g, s);
  c.ratio = lp_norm(g, q) / (std::pow(hs, c.theta) * std::pow(l2, 1.0 - c.theta));
  return c;
}

struct IntegralIneqCheck {
  double a = 0.0, b = 0.0;
  std::vector<std::pair<double, double>> ratio_curve;  // (t, ratio)
};

/// For each t: quadrature of int_0^t (1+t-tau)^{-a} (1+tau)^{-b} dtau times
/// (1+t)^{min(a,b)}. Bounded curves numerically realize the convolution
/// estimate; requires max(a, b) > 1.
inline IntegralIneqCheck integral_inequality_ratio(double a, double b,
                                                   const std::vector<double>& t_grid) {
  if (!(std::max(a, b) > 1.0))
    throw ValidationError("integral_inequality_ratio: requires max(a,b) > 1");
  IntegralIneqCheck c;
  c.a = a;
  c.b = b;
  const double m = std::min(a, b);
  for (double t : t_grid) {
    if (t < 0.0) throw ValidationError("integral_inequality_ratio: t must be nonnegative");
    double integral = 0.0;
    if (t > 0.0) {
      // split at t/2 so the adaptive scheme sees each endpoint's scale
      const auto f = [&](double tau) {
        return std::pow(1.0 + t - tau, -a) * std::pow(1.0 + tau, -b);
      };
      integral = integrate(f, 0.0, 0.5 * t, 1e-12) + integrate(f, 0.5 * t, t, 1e-12);
    }
    c.ratio_curve.emplace_back(t, integral * std::pow(1.0 + t, m));
  }
  return c;
}

/// Log-spaced grid helper (inclusive endpoints).
inline std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) throw ValidationError("log_spaced: bad range");
  std::vector<double> out(count);
  const double la = std::log(lo), lb = std::log(hi);
  for (int i = 0; i < count; ++i) out[i] = std::exp(la + (lb - la) * i / (count - 1));
  return out;
}

}  // namespace fracwave
