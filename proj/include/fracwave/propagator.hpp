#pragma once

// Exact per-mode evolution of the Cauchy state for the dispersive-structural
// equation
//     u_tt + (-Delta)^sigma u + (-Delta)^{2delta} u + 2 (-Delta)^delta u_t = 0,
// whose per-mode symbol lambda^2 + 2 beta lambda + (beta^2 + omega^2) with
// beta = r^{2delta}, omega = r^sigma has the conjugate roots -beta +/- i omega.
//
// The state update uses the real trigonometric form
//     v (t) = e^{-beta t} ( a cos(omega t) + (b + beta a) sinc )
//     v'(t) = e^{-beta t} ( b cos(omega t) - (beta b + a (beta^2+omega^2)) sinc )
// with sinc = sin(omega t)/omega, instead of differences of complex
// exponentials that cancel badly for omega t << 1. The zero mode degenerates
// to the free particle (a + b t, b).

#include <cmath>
#include <vector>

#include "fracwave/field.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/spectral_ops.hpp"

namespace fracwave {

/// Full spectral Cauchy state (displacement, velocity) at a point in time.
struct CauchyState {
  SpectralField displacement;
  SpectralField velocity;
  double time = 0.0;

  CauchyState(SpectralField u, SpectralField ut, double t = 0.0)
      : displacement(std::move(u)), velocity(std::move(ut)), time(t) {
    if (!(displacement.grid() == velocity.grid()))
      throw ValidationError("CauchyState: displacement and velocity grids differ");
  }

  static CauchyState rest(const Grid& g) { return {SpectralField(g), SpectralField(g)}; }
};

namespace detail {

/// Entries of the exact 2x2 per-mode propagation matrix over time tau.
struct ModeMatrix {
  double m11, m12, m21, m22;
};

inline ModeMatrix mode_matrix(double beta, double omega, double tau) {
  const double e = std::exp(-beta * tau);
  const double c = std::cos(omega * tau);
  const double s = stable_sinc(omega, tau);
  return {e * (c + beta * s), e * s, -e * (beta * beta + omega * omega) * s, e * (c - beta * s)};
}

inline void check_main_model_params(double sigma, double delta) {
  if (!(delta > 0.0 && 2.0 * delta < sigma))
    throw ValidationError("propagator: requires 0 < 2delta < sigma");
}

}  // namespace detail

/// Displacement response to unit initial velocity:
/// e^{-r^{2delta} t} sin(r^sigma t)/r^sigma, with the removable singularities
/// at r = 0 and small omega t evaluated by series.
inline double solution_multiplier_main(double sigma, double delta, double t, double r) {
  const double beta = std::pow(r, 2.0 * delta);
  const double omega = std::pow(r, sigma);
  return std::exp(-beta * t) * stable_sinc(omega, t);
}

/// Velocity response to unit initial velocity:
/// e^{-r^{2delta} t} (cos(r^sigma t) - r^{2delta-sigma} sin(r^sigma t)); 1 at r=0.
inline double velocity_multiplier(double sigma, double delta, double t, double r) {
  if (t < 0.0) throw ValidationError("velocity_multiplier: t must be nonnegative");
  const double beta = std::pow(r, 2.0 * delta);
  const double omega = std::pow(r, sigma);
  return std::exp(-beta * t) * (std::cos(omega * t) - beta * stable_sinc(omega, t));
}

/// Evolve the full state exactly over dt (composition in dt is exact up to
/// round-off; no step-size restriction).
inline CauchyState propagate_state(const CauchyState& state, double sigma, double delta, double dt) {
  detail::check_main_model_params(sigma, delta);
  if (dt < 0.0) throw ValidationError("propagate_state: dt must be nonnegative");
  const Grid& g = state.displacement.grid();
  CauchyState out = state;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double q = g.freq_sq(i);
    const Complex a = state.displacement[i];
    const Complex b = state.velocity[i];
    if (q == 0.0) {
      out.displacement[i] = a + b * dt;
      out.velocity[i] = b;
      continue;
    }
    const double beta = std::pow(q, delta);
    const double omega = std::pow(q, 0.5 * sigma);
    const auto m = detail::mode_matrix(beta, omega, dt);
    out.displacement[i] = m.m11 * a + m.m12 * b;
    out.velocity[i] = m.m21 * a + m.m22 * b;
  }
  out.time = state.time + dt;
  return out;
}

/// Decay-rate exponents of the (L1 cap L2)-L2 estimates for the main model.
struct DecayWeights {
  double w_u;         // (n - 2 sigma) / (4 delta)
  double w_energy;    // n / (4 delta)
  double w_delta;     // (n - (2 sigma - 4 delta)) / (4 delta)
  double w_velocity;  // same as w_delta
  /// False when n <= 2 sigma: the solution itself is not guaranteed to decay.
  bool solution_decay_guaranteed;
};

inline DecayWeights decay_weights(int n, double sigma, double delta) {
  if (!(delta > 0.0)) throw ValidationError("decay_weights: delta must be positive");
  const double d4 = 4.0 * delta;
  DecayWeights w{};
  w.w_u = (n - 2.0 * sigma) / d4;
  w.w_energy = n / d4;
  w.w_delta = (n - (2.0 * sigma - 4.0 * delta)) / d4;
  w.w_velocity = w.w_delta;
  w.solution_decay_guaranteed = w.w_u > 0.0;
  return w;
}

/// Radial majorant norm Q(t) = ( int_0^1 r^{n-1+2a} e^{-2 t r^b} dr )^{1/2},
/// the low-frequency L2 norm of the envelope r^a e^{-t r^b}. Decays like
/// (1+t)^{-(n+2a)/(2b)} for n + 2a > 0.
///
/// Evaluated through the substitution z = 2 t r^b, which turns the integral
/// into the lower incomplete gamma function (1/b) (2t)^{-q/b} gamma(q/b, 2t)
/// with q = n + 2a. A direct quadrature loses the integrand once its peak
/// width drops below the subdivision limit (t beyond ~1e3).
inline double majorant_norm_decay(double a, double b, int n, double t) {
  if (!(b > 0.0)) throw ValidationError("majorant_norm_decay: b must be positive");
  const double q = n + 2.0 * a;
  if (!(q > 0.0)) throw ValidationError("majorant_norm_decay: divergent integral, requires n + 2a > 0");
  if (t < 0.0) throw ValidationError("majorant_norm_decay: t must be nonnegative");
  if (t == 0.0) return std::sqrt(1.0 / q);
  const double s = q / b;
  const double value = boost::math::tgamma_lower(s, 2.0 * t) * std::pow(2.0 * t, -s) / b;
  return std::sqrt(value);
}

/// Low-frequency L2 norm of the true multiplier,
/// ( int_0^1 r^{n-1} |m(t,r)|^2 dr )^{1/2}, for comparison against the majorant.
inline double multiplier_lowfreq_l2(double sigma, double delta, int n, double t) {
  // sin(omega t)/omega stays bounded at r -> 0, so the weight is just r^{n-1}.
  // The envelope e^{-2 t r^{2 delta}} concentrates near r = 0 for large t;
  // rescaling its support to O(1) keeps the adaptive scheme accurate.
  const auto weight = [&](double r) {
    const double m = solution_multiplier_main(sigma, delta, t, r);
    return m * m;
  };
  const double gamma = double(n - 1);
  const double r_star =
      t > 20.0 ? std::min(1.0, std::pow(20.0 / t, 1.0 / (2.0 * delta))) : 1.0;
  // [0, r_star]: substitute r = r_star y
  double value = std::pow(r_star, gamma + 1.0) *
                 integrate_radial_power(gamma, [&](double y) { return weight(r_star * y); }, 1e-10);
  if (r_star < 1.0)
    value += integrate([&](double r) { return std::pow(r, gamma) * weight(r); }, r_star, 1.0, 1e-10);
  return std::sqrt(value);
}

}  // namespace fracwave
