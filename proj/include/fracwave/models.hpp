#pragma once

// Catalogue of linear evolution models with fractional-power symbols, their
// characteristic roots, formal solution multipliers, low-frequency validity
// regions and diffusion/oscillation regime classes.
//
// Roots and multipliers reproduce each model's printed formal solution; for
// the frictional and effective/critical structural variants those printed
// exponent pairs are internally inconsistent with the underlying symbol by
// factors of two (see the note at characteristic_roots), and are kept as
// printed. The dispersive-structural model, the subject of the solver and
// propagator modules, has exactly conjugate roots -r^{2delta} +/- i r^sigma
// and needs no such caveat.

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include "fracwave/common.hpp"

namespace fracwave {

enum class ModelVariant {
  AnomalousDiffusion,      // v_t + c(-Delta)^sigma v = 0
  FrictionalDamped,        // u_tt + (-Delta)^sigma u + u_t = 0
  EffectiveStructural,     // u_tt + (-Delta)^sigma u + (-Delta)^delta u_t = 0, 2delta < sigma
  CriticalStructural,      // u_tt + (-Delta)^sigma u + mu (-Delta)^{sigma/2} u_t = 0
  Schrodinger,             // v_t + i(-Delta)^sigma v = 0
  FreeWave,                // u_tt + (-Delta)^sigma u = 0
  GeneralizedSchrodinger,  // v_t + (-Delta)^{2delta} v + i(-Delta)^sigma v = 0, 2delta < sigma
  DispersiveStructural,    // u_tt + (-Delta)^sigma u + (-Delta)^{2delta} u + 2(-Delta)^delta u_t = 0
  NonEffectiveStructural   // u_tt + (-Delta)^sigma u + (-Delta)^delta u_t = 0, sigma < 2delta < 2sigma
};

inline const char* to_string(ModelVariant v) {
  switch (v) {
    case ModelVariant::AnomalousDiffusion: return "anomalous-diffusion";
    case ModelVariant::FrictionalDamped: return "frictional-damped";
    case ModelVariant::EffectiveStructural: return "effective-structural";
    case ModelVariant::CriticalStructural: return "critical-structural";
    case ModelVariant::Schrodinger: return "schrodinger";
    case ModelVariant::FreeWave: return "free-wave";
    case ModelVariant::GeneralizedSchrodinger: return "generalized-schrodinger";
    case ModelVariant::DispersiveStructural: return "dispersive-structural";
    case ModelVariant::NonEffectiveStructural: return "non-effective-structural";
  }
  return "?";
}

struct ModelSpec {
  ModelVariant variant = ModelVariant::DispersiveStructural;
  double sigma = 1.0;
  double delta = 0.0;           // 0 where unused
  double mu = 2.0;              // CriticalStructural only
  double diffusion_coeff = 1.0; // AnomalousDiffusion only

  void validate() const {
    if (!(sigma > 0.0)) throw ValidationError("model: sigma must be positive");
    switch (variant) {
      case ModelVariant::DispersiveStructural:
      case ModelVariant::GeneralizedSchrodinger:
        if (!(delta > 0.0 && 2.0 * delta < sigma))
          throw ValidationError(std::string(to_string(variant)) + ": requires 0 < 2delta < sigma");
        break;
      case ModelVariant::NonEffectiveStructural:
        if (!(sigma < 2.0 * delta && 2.0 * delta < 2.0 * sigma))
          throw ValidationError("non-effective-structural: requires sigma < 2delta < 2sigma");
        break;
      case ModelVariant::EffectiveStructural:
        if (!(delta > 0.0 && delta < 0.5 * sigma))
          throw ValidationError("effective-structural: requires delta in (0, sigma/2)");
        break;
      case ModelVariant::CriticalStructural:
        if (!(mu >= 2.0)) throw ValidationError("critical-structural: requires mu >= 2");
        break;
      case ModelVariant::AnomalousDiffusion:
        if (!(diffusion_coeff > 0.0)) throw ValidationError("anomalous-diffusion: requires c > 0");
        break;
      default:
        break;
    }
  }

  bool first_order() const {
    return variant == ModelVariant::AnomalousDiffusion || variant == ModelVariant::Schrodinger ||
           variant == ModelVariant::GeneralizedSchrodinger;
  }
};

enum class RegimeKind {
  Diffusion,
  Oscillation,
  CoupledDiffusionDominant,
  CoupledBalanced,
  CoupledOscillationDominant
};

inline const char* to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::Diffusion: return "diffusion";
    case RegimeKind::Oscillation: return "oscillation";
    case RegimeKind::CoupledDiffusionDominant: return "coupled-diffusion-dominant";
    case RegimeKind::CoupledBalanced: return "coupled-balanced";
    case RegimeKind::CoupledOscillationDominant: return "coupled-oscillation-dominant";
  }
  return "?";
}

/// Regime of the multiplier exp(-c r^a t +/- i r^b t): a is the diffusion
/// exponent, b the oscillation exponent (0 where the phenomenon is absent).
struct RegimeClass {
  RegimeKind kind;
  double a_exponent;
  double b_exponent;
};

/// Radius of the low-frequency region where a model's root formulas apply;
/// infinity when unrestricted.
struct FrequencyValidity {
  double radius = std::numeric_limits<double>::infinity();
  bool unrestricted() const { return std::isinf(radius); }
};

inline FrequencyValidity validity_region(const ModelSpec& m) {
  m.validate();
  switch (m.variant) {
    case ModelVariant::FrictionalDamped:
      return {std::pow(0.25, 1.0 / (2.0 * m.sigma))};
    case ModelVariant::EffectiveStructural:
      return {std::pow(0.25, 1.0 / (2.0 * m.sigma - 4.0 * m.delta))};
    case ModelVariant::NonEffectiveStructural:
      return {std::pow(0.25, 1.0 / (4.0 * m.delta - 2.0 * m.sigma))};
    default:
      return {};
  }
}

namespace detail {
inline void check_validity(const ModelSpec& m, double r) {
  if (r < 0.0) throw ValidationError("frequency radius r must be nonnegative");
  const auto region = validity_region(m);
  if (!(r < region.radius))
    throw ValidationError(std::string(to_string(m.variant)) + ": |xi| = " + std::to_string(r) +
                          " outside the low-frequency validity region |xi| < " +
                          std::to_string(region.radius));
}
}  // namespace detail

/// Characteristic roots at |xi| = r, ordered so that lambda1 has nonnegative
/// imaginary part (for real pairs, lambda1 >= lambda2). First-order models
/// return their single root duplicated.
///
/// The frictional/effective/critical structural roots are read off the
/// catalogued exponent formulas. For the frictional model the second
/// exponent -1 - sqrt(1 - 4r^{2sigma}) lacks the halving present in the
/// symbol's actual roots (-1 +/- sqrt(...))/2; the formula is kept as
/// catalogued rather than silently corrected, so these multipliers solve the
/// constant-coefficient equation built from the returned roots, not the
/// original symbol.
inline std::pair<Complex, Complex> characteristic_roots(const ModelSpec& m, double r) {
  detail::check_validity(m, r);
  const double rs = std::pow(r, m.sigma);      // r^sigma
  switch (m.variant) {
    case ModelVariant::AnomalousDiffusion: {
      const Complex l(-m.diffusion_coeff * std::pow(r, 2.0 * m.sigma), 0.0);
      return {l, l};
    }
    case ModelVariant::Schrodinger: {
      const Complex l(0.0, -std::pow(r, 2.0 * m.sigma));
      return {l, l};
    }
    case ModelVariant::GeneralizedSchrodinger: {
      const Complex l(-std::pow(r, 4.0 * m.delta), -std::pow(r, 2.0 * m.sigma));
      return {l, l};
    }
    case ModelVariant::FreeWave:
      return {Complex(0.0, rs), Complex(0.0, -rs)};
    case ModelVariant::DispersiveStructural: {
      const double beta = std::pow(r, 2.0 * m.delta);
      return {Complex(-beta, rs), Complex(-beta, -rs)};
    }
    case ModelVariant::NonEffectiveStructural: {
      const double beta = std::pow(r, 2.0 * m.delta);
      const double disc = 1.0 - 4.0 * std::pow(r, 4.0 * m.delta - 2.0 * m.sigma);
      const double osc = rs * std::sqrt(disc);
      return {Complex(-beta, osc), Complex(-beta, -osc)};
    }
    case ModelVariant::FrictionalDamped: {
      const double s = std::sqrt(1.0 - 4.0 * std::pow(r, 2.0 * m.sigma));
      return {Complex(-std::pow(r, 2.0 * m.sigma) / (1.0 + s), 0.0), Complex(-1.0 - s, 0.0)};
    }
    case ModelVariant::EffectiveStructural: {
      const double s = std::sqrt(1.0 - 4.0 * std::pow(r, 2.0 * m.sigma - 4.0 * m.delta));
      const double b2d = std::pow(r, 2.0 * m.delta);
      return {Complex(-std::pow(r, 2.0 * m.sigma - 2.0 * m.delta) / (1.0 + s), 0.0),
              Complex(-b2d * (1.0 + s), 0.0)};
    }
    case ModelVariant::CriticalStructural: {
      if (m.mu == 2.0) return {Complex(-rs, 0.0), Complex(-rs, 0.0)};
      const double s = std::sqrt(m.mu * m.mu - 4.0);
      return {Complex(-rs / (m.mu + s), 0.0), Complex(-0.5 * rs * (m.mu + s), 0.0)};
    }
  }
  throw ValidationError("characteristic_roots: unknown variant");
}

/// Data-to-solution factor at time t and |xi| = r: multiplies the initial
/// velocity for second-order models and the initial datum for first-order
/// ones. Removable r -> 0 singularities use the series branch of
/// stable_sinc; real-root differences use expm1 to avoid cancellation when
/// the two exponents nearly coincide.
inline Complex solution_multiplier(const ModelSpec& m, double t, double r) {
  if (t < 0.0) throw ValidationError("solution_multiplier: t must be nonnegative");
  detail::check_validity(m, r);
  const double rs = std::pow(r, m.sigma);
  switch (m.variant) {
    case ModelVariant::AnomalousDiffusion:
      return {std::exp(-m.diffusion_coeff * std::pow(r, 2.0 * m.sigma) * t), 0.0};
    case ModelVariant::Schrodinger:
      return std::exp(Complex(0.0, -std::pow(r, 2.0 * m.sigma) * t));
    case ModelVariant::GeneralizedSchrodinger:
      return std::exp(Complex(-std::pow(r, 4.0 * m.delta) * t, -std::pow(r, 2.0 * m.sigma) * t));
    case ModelVariant::FreeWave:
      return {stable_sinc(rs, t), 0.0};
    case ModelVariant::DispersiveStructural:
      return {std::exp(-std::pow(r, 2.0 * m.delta) * t) * stable_sinc(rs, t), 0.0};
    case ModelVariant::NonEffectiveStructural: {
      const double disc = 1.0 - 4.0 * std::pow(r, 4.0 * m.delta - 2.0 * m.sigma);
      const double omega = rs * std::sqrt(disc);
      return {std::exp(-std::pow(r, 2.0 * m.delta) * t) * stable_sinc(omega, t), 0.0};
    }
    case ModelVariant::FrictionalDamped: {
      const double s = std::sqrt(1.0 - 4.0 * std::pow(r, 2.0 * m.sigma));
      const double l1 = -std::pow(r, 2.0 * m.sigma) / (1.0 + s);
      const double l2 = -1.0 - s;
      return {exp_diff(l1 * t, l2 * t) / s, 0.0};
    }
    case ModelVariant::EffectiveStructural: {
      // r = 0 is the limit of the catalogued ratio: numerator ~ (l1-l2)t ~ 2r^{2delta}t,
      // denominator ~ r^{2delta}.
      if (r == 0.0) return {2.0 * t, 0.0};
      const double s = std::sqrt(1.0 - 4.0 * std::pow(r, 2.0 * m.sigma - 4.0 * m.delta));
      const double b2d = std::pow(r, 2.0 * m.delta);
      const double l1 = -std::pow(r, 2.0 * m.sigma - 2.0 * m.delta) / (1.0 + s);
      const double l2 = -b2d * (1.0 + s);
      return {exp_diff(l1 * t, l2 * t) / (b2d * s), 0.0};
    }
    case ModelVariant::CriticalStructural: {
      if (m.mu == 2.0) return {t * std::exp(-rs * t), 0.0};
      const double s = std::sqrt(m.mu * m.mu - 4.0);
      const double ms = m.mu + s;
      if (r == 0.0) return {t * (ms * ms - 2.0) / (2.0 * ms * s), 0.0};
      const double l1 = -rs / ms;
      const double l2 = -0.5 * rs * ms;
      return {exp_diff(l1 * t, l2 * t) / (rs * s), 0.0};
    }
  }
  throw ValidationError("solution_multiplier: unknown variant");
}

inline RegimeClass classify_regime(const ModelSpec& m) {
  m.validate();
  switch (m.variant) {
    case ModelVariant::AnomalousDiffusion:
    case ModelVariant::FrictionalDamped:
      return {RegimeKind::Diffusion, 2.0 * m.sigma, 0.0};
    case ModelVariant::EffectiveStructural:
      return {RegimeKind::Diffusion, 2.0 * m.sigma - 2.0 * m.delta, 0.0};
    case ModelVariant::CriticalStructural:
      return {RegimeKind::Diffusion, m.sigma, 0.0};
    case ModelVariant::Schrodinger:
      return {RegimeKind::Oscillation, 0.0, 2.0 * m.sigma};
    case ModelVariant::FreeWave:
      return {RegimeKind::Oscillation, 0.0, m.sigma};
    case ModelVariant::GeneralizedSchrodinger: {
      const double a = 4.0 * m.delta, b = 2.0 * m.sigma;
      return {a < b ? RegimeKind::CoupledDiffusionDominant
                    : (a == b ? RegimeKind::CoupledBalanced : RegimeKind::CoupledOscillationDominant),
              a, b};
    }
    case ModelVariant::DispersiveStructural: {
      const double a = 2.0 * m.delta, b = m.sigma;
      return {a < b ? RegimeKind::CoupledDiffusionDominant
                    : (a == b ? RegimeKind::CoupledBalanced : RegimeKind::CoupledOscillationDominant),
              a, b};
    }
    case ModelVariant::NonEffectiveStructural:
      return {RegimeKind::CoupledOscillationDominant, 2.0 * m.delta, m.sigma};
  }
  throw ValidationError("classify_regime: unknown variant");
}

}  // namespace fracwave
