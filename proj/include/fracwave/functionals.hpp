#pragma once

// Weak-solution functionals: the space-time identity satisfied by weak
// solutions tested against psi_R = eta(t/R^alpha) phi(x/R^theta), the
// functionals I_R, I_{R,t} and the four partial-integration terms J_1..J_4
// with their R-scaling exponents, and the exact subcritical-range criterion.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "fracwave/rational.hpp"
#include "fracwave/solver.hpp"
#include "fracwave/testfunc.hpp"

namespace fracwave {

namespace detail {

/// Composite Simpson on a uniform grid of values (odd count preferred; a
/// trailing trapezoid cell absorbs an even count).
inline double simpson(const std::vector<double>& v, double h) {
  const std::size_t n = v.size();
  if (n < 2) return 0.0;
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) acc += h / 3.0 * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
  if (i + 1 < n) acc += 0.5 * h * (v[i] + v[i + 1]);
  return acc;
}

}  // namespace detail

/// Manufactured space-time field u(t,x) = w(t) G(x) with analytic time
/// derivatives; u(0,.) = w(0) G must vanish for the weak identity's data term
/// to appear in its catalogued form.
struct SeparableSolution {
  std::function<double(double)> w, w1, w2;  // w, w', w''
  PhysicalField profile;
};

struct WeakIdentityReport {
  double residual = 0.0;        // |lhs - rhs| / max term magnitude
  double lhs = 0.0;             // integral of the forcing against psi_R
  double rhs = 0.0;
  std::array<double, 5> rhs_terms{};  // u psi_tt, sigma term, 2delta term, -2 delta-term, -data
};

/// Evaluates every term of the weak-solution identity for a manufactured u,
/// with the forcing computed as u_tt + (-Delta)^sigma u + (-Delta)^{2delta} u
/// + 2 (-Delta)^delta u_t, by lattice sums in space and composite Simpson in
/// time over [0, R^alpha]. corrupt_sign flips the dispersion term of the
/// right-hand side, a negative control that must destroy the balance.
template <class Cutoff>
WeakIdentityReport weak_identity_residual(const SeparableSolution& u, double sigma, double delta,
                                          const TestFunctionSpec& spec, const Cutoff& eta,
                                          int time_steps, bool corrupt_sign = false) {
  const Grid& g = u.profile.grid();
  spec.validate(g.dim());
  if (time_steps < 8) throw ValidationError("weak_identity_residual: too few time steps");
  if (std::abs(u.w(0.0)) > 0.0)
    throw ValidationError("weak_identity_residual: manufactured solution must vanish at t = 0");

  // spatial ingredients (all lattice sums against phi_R or its images)
  const PhysicalField phiR = phi_field(g, spec);
  const SpectralField Ghat = forward_transform(u.profile);
  const PhysicalField G_sig = inverse_transform(apply_fractional_laplacian(Ghat, sigma));
  const PhysicalField G_2d = inverse_transform(apply_fractional_laplacian(Ghat, 2.0 * delta));
  const PhysicalField G_d = inverse_transform(apply_fractional_laplacian(Ghat, delta));

  const SpectralField phiR_hat = forward_transform(phiR);
  const PhysicalField phiR_sig = inverse_transform(apply_fractional_laplacian(phiR_hat, sigma));
  const PhysicalField phiR_2d = inverse_transform(apply_fractional_laplacian(phiR_hat, 2.0 * delta));
  const PhysicalField phiR_d = inverse_transform(apply_fractional_laplacian(phiR_hat, delta));

  const double S_id = lattice_product_sum(u.profile, phiR);
  const double S_sig_u = lattice_product_sum(G_sig, phiR);     // ((-Delta)^sigma G, phi_R)
  const double S_2d_u = lattice_product_sum(G_2d, phiR);
  const double S_d_u = lattice_product_sum(G_d, phiR);
  const double S_sig_phi = lattice_product_sum(u.profile, phiR_sig);  // (G, (-Delta)^sigma phi_R)
  const double S_2d_phi = lattice_product_sum(u.profile, phiR_2d);
  const double S_d_phi = lattice_product_sum(u.profile, phiR_d);

  // time quadrature over [0, T], T = R^alpha; integrands vanish beyond T
  const double T = std::pow(spec.R, spec.alpha);
  const double h = T / time_steps;
  const double ralpha = std::pow(spec.R, -spec.alpha);
  std::vector<double> f_lhs(time_steps + 1), f_tt(time_steps + 1), f_eta(time_steps + 1),
      f_etap_w1(time_steps + 1);
  for (int i = 0; i <= time_steps; ++i) {
    const double t = i * h;
    const double tau = t * ralpha;  // eta argument
    const double e = eta.value(tau);
    // forcing against psi_R: (w'' S_id + w (S_sig_u + S_2d_u) + 2 w' S_d_u) eta
    f_lhs[i] = e * (u.w2(t) * S_id + u.w(t) * (S_sig_u + S_2d_u) + 2.0 * u.w1(t) * S_d_u);
    f_tt[i] = u.w(t) * eta.d2(tau) * ralpha * ralpha;  // u psi_tt spatial part S_id
    f_eta[i] = e * u.w(t);
    f_etap_w1[i] = u.w(t) * eta.d1(tau) * ralpha;      // u (psi_t spatial part)
  }
  WeakIdentityReport rep;
  rep.lhs = detail::simpson(f_lhs, h);
  const double term_tt = detail::simpson(f_tt, h) * S_id;
  const double int_eta_w = detail::simpson(f_eta, h);
  const double term_sig = int_eta_w * S_sig_phi;
  const double term_2d = (corrupt_sign ? -1.0 : 1.0) * int_eta_w * S_2d_phi;
  const double term_d = -2.0 * detail::simpson(f_etap_w1, h) * S_d_phi;
  const double term_data = -u.w1(0.0) * eta.value(0.0) * S_id;
  rep.rhs_terms = {term_tt, term_sig, term_2d, term_d, term_data};
  rep.rhs = term_tt + term_sig + term_2d + term_d + term_data;

  double scale = std::abs(rep.lhs);
  for (double v : rep.rhs_terms) scale = std::max(scale, std::abs(v));
  rep.residual = scale > 0.0 ? std::abs(rep.lhs - rep.rhs) / scale : 0.0;
  return rep;
}

struct FunctionalReport {
  double I_R = 0.0;
  double I_Rt = 0.0;
  double J1 = 0.0, J2 = 0.0, J3 = 0.0, J4 = 0.0;
  double data_term = 0.0;  // integral of u1 phi_R
  double residual = 0.0;   // balance of I_R = -data + J1 + J2 + J3 - J4, relative
};

/// Space-time quadrature of the blow-up functionals on a stored trajectory:
/// I_R over [0, R^alpha], I_{R,t} over [R^alpha/2, R^alpha], and the four
/// J terms with the fractional Laplacians moved onto phi_R (exchange
/// property). Requires snapshots covering [0, R^alpha].
template <class Cutoff>
FunctionalReport compute_functionals(const Trajectory& traj, const TestFunctionSpec& spec,
                                     const Cutoff& eta, double p) {
  if (traj.snapshots.empty())
    throw ValidationError("compute_functionals: trajectory has no stored snapshots");
  const Grid& g = traj.snapshots.front().grid();
  spec.validate(g.dim());
  const double T = std::pow(spec.R, spec.alpha);
  if (traj.snapshot_times.back() < T - 1e-12)
    throw ValidationError("compute_functionals: trajectory shorter than R^alpha");

  const PhysicalField phiR = phi_field(g, spec);
  const SpectralField phiR_hat = forward_transform(phiR);
  const PhysicalField phiR_sig =
      inverse_transform(apply_fractional_laplacian(phiR_hat, traj.sigma));
  const PhysicalField phiR_2d =
      inverse_transform(apply_fractional_laplacian(phiR_hat, 2.0 * traj.delta));
  const PhysicalField phiR_d = inverse_transform(apply_fractional_laplacian(phiR_hat, traj.delta));

  // per-snapshot lattice sums, truncated after the first time >= T
  std::size_t count = 0;
  while (count < traj.snapshot_times.size() && traj.snapshot_times[count] <= T + 1e-12) ++count;
  const double h = count > 1 ? traj.snapshot_times[1] - traj.snapshot_times[0] : 0.0;
  if (!(h > 0.0)) throw ValidationError("compute_functionals: need at least two snapshots");

  const double ralpha = std::pow(spec.R, -spec.alpha);
  std::vector<double> a_IR(count), b_J1(count), c_J2(count), d_J3(count), e_J4(count);
  const double hv = g.cell_volume();
  for (std::size_t i = 0; i < count; ++i) {
    const PhysicalField& u = traj.snapshots[i];
    const double t = traj.snapshot_times[i];
    const double tau = t * ralpha;
    double s_abs = 0.0, s_b = 0.0, s_c = 0.0, s_d = 0.0, s_e = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      const double ur = u[j].real();
      s_abs += std::pow(std::abs(ur), p) * phiR[j].real();
      s_b += ur * phiR[j].real();
      s_c += ur * phiR_sig[j].real();
      s_d += ur * phiR_2d[j].real();
      s_e += ur * phiR_d[j].real();
    }
    const double e = eta.value(tau);
    a_IR[i] = e * s_abs * hv;
    b_J1[i] = eta.d2(tau) * ralpha * ralpha * s_b * hv;
    c_J2[i] = e * s_c * hv;
    d_J3[i] = e * s_d * hv;
    e_J4[i] = eta.d1(tau) * ralpha * s_e * hv;
  }

  FunctionalReport rep;
  rep.I_R = detail::simpson(a_IR, h);
  // I_{R,t}: same integrand over [T/2, T]; the partial cell at the left window
  // edge is handled by a linearly interpolated trapezoid.
  {
    const double t_half = 0.5 * T;
    std::size_t j0 = 0;
    while (j0 < count && traj.snapshot_times[j0] < t_half) ++j0;
    if (j0 < count) {
      std::vector<double> tail(a_IR.begin() + j0, a_IR.begin() + count);
      rep.I_Rt = detail::simpson(tail, h);
      if (j0 > 0 && traj.snapshot_times[j0] > t_half) {
        const double t_lo = traj.snapshot_times[j0 - 1];
        const double t_hi = traj.snapshot_times[j0];
        const double v_at_half =
            a_IR[j0 - 1] + (a_IR[j0] - a_IR[j0 - 1]) * (t_half - t_lo) / (t_hi - t_lo);
        rep.I_Rt += 0.5 * (v_at_half + a_IR[j0]) * (t_hi - t_half);
      }
    }
  }
  rep.J1 = detail::simpson(b_J1, h);
  rep.J2 = detail::simpson(c_J2, h);
  rep.J3 = detail::simpson(d_J3, h);
  rep.J4 = 2.0 * detail::simpson(e_J4, h);
  rep.data_term = lattice_product_sum(traj.initial_velocity, phiR);

  const double rhs = -rep.data_term + rep.J1 + rep.J2 + rep.J3 - rep.J4;
  double scale = std::abs(rep.I_R);
  for (double v : {rep.data_term, rep.J1, rep.J2, rep.J3, rep.J4}) scale = std::max(scale, std::abs(v));
  rep.residual = scale > 0.0 ? std::abs(rep.I_R - rhs) / scale : 0.0;
  return rep;
}

/// Exact R-scaling bookkeeping of the J estimates at a chosen alpha, and the
/// resulting subcritical criterion. With alpha = 2 delta the J1, J3, J4
/// exponents coincide at -4delta + (n+2delta)/p' and the final power is
/// dominant = -4 delta p' + n + 2 delta; it is negative exactly when
/// p < 1 + 4 delta / (n - 2 delta). All in exact rational arithmetic.
struct ScalingLedger {
  Rat alpha_choice;
  Rat expo_J1, expo_J2, expo_J3, expo_J4;
  Rat dominant;
  bool blowup_condition_met = false;
};

inline ScalingLedger blowup_criterion(int n, const Rat& delta, const Rat& p,
                                      const Rat& sigma = 2) {
  if (!(p > 1)) throw ValidationError("blowup_criterion: p must be > 1");
  if (!(Rat(n) > 2 * delta)) throw ValidationError("blowup_criterion: requires n > 2delta");
  const Rat pprime = p / (p - 1);
  ScalingLedger led;
  led.alpha_choice = 2 * delta;
  const Rat shift = (n + led.alpha_choice) / pprime;
  led.expo_J1 = -2 * led.alpha_choice + shift;
  led.expo_J2 = -2 * sigma + shift;
  led.expo_J3 = -4 * delta + shift;
  led.expo_J4 = -led.alpha_choice - 2 * delta + shift;
  led.dominant = -4 * delta * pprime + n + 2 * delta;
  led.blowup_condition_met = led.dominant < 0;
  return led;
}

}  // namespace fracwave
