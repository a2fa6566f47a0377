#pragma once

// Critical exponents, admissibility conditions and gap intervals for the
// damped/dispersive model family, in exact rational arithmetic.

#include <cmath>

#include "fracwave/rational.hpp"

namespace fracwave {

struct ExponentQuery {
  int n = 1;          // space dimension
  Rat sigma = 1;
  Rat delta = 0;
  Rat m_reg = 1;      // L^m data regularity, m in [1, 2]
  Rat mu = 2;
};

/// Fujita exponent 1 + 2 m sigma / n shared by the anomalous-diffusion and
/// frictional-damping models with L^m cap L^2 data.
inline Rat fujita_m(const ExponentQuery& q) {
  if (q.n < 1) throw ValidationError("fujita_m: n must be >= 1");
  if (q.m_reg < 1 || q.m_reg > 2) throw ValidationError("fujita_m: m must lie in [1, 2]");
  return 1 + 2 * q.m_reg * q.sigma / q.n;
}

/// Structural-damping exponent 1 + 2 sigma / (n - 2 delta), n > 2 delta.
/// At delta = sigma/2 this collapses to 1 + 2 sigma / (n - sigma).
inline Rat fujita_structural(const ExponentQuery& q) {
  if (!(Rat(q.n) > 2 * q.delta)) throw ValidationError("fujita_structural: requires n > 2delta");
  return 1 + 2 * q.sigma / (q.n - 2 * q.delta);
}

/// Lower bound 1 + (sigma + 2 delta) / (n - sigma) for global existence of
/// small-data solutions; requires n > sigma.
inline Rat global_lower_bound(const ExponentQuery& q) {
  if (!(Rat(q.n) > q.sigma)) throw ValidationError("global_lower_bound: requires n > sigma");
  return 1 + (q.sigma + 2 * q.delta) / (q.n - q.sigma);
}

/// Upper bound 1 + 4 delta / (n - 2 delta) below which weak solutions with
/// positive-mean data blow up; requires n > 2 delta. Independent of sigma.
inline Rat blowup_upper_bound(const ExponentQuery& q) {
  if (!(Rat(q.n) > 2 * q.delta)) throw ValidationError("blowup_upper_bound: requires n > 2delta");
  return 1 + 4 * q.delta / (q.n - 2 * q.delta);
}

struct GapInterval {
  Rat lower;           // 1 + 2 sigma / (n - sigma)
  Rat upper;           // 1 + (sigma + 2 delta) / (n - sigma)
  Rat main_gap_lower;  // 1 + 4 delta / (n - 2 delta)
  Rat main_gap_upper;  // same as upper
  bool oscillatory_empty = false;  // lower >= upper
  bool main_empty = false;         // main_gap_lower >= main_gap_upper
};

inline GapInterval gap(const ExponentQuery& q) {
  if (!(Rat(q.n) > q.sigma)) throw ValidationError("gap: requires n > sigma");
  if (!(Rat(q.n) > 2 * q.delta)) throw ValidationError("gap: requires n > 2delta");
  GapInterval g;
  g.lower = 1 + 2 * q.sigma / (q.n - q.sigma);
  g.upper = global_lower_bound(q);
  g.main_gap_lower = blowup_upper_bound(q);
  g.main_gap_upper = g.upper;
  g.oscillatory_empty = !(g.lower < g.upper);
  g.main_empty = !(g.main_gap_lower < g.main_gap_upper);
  return g;
}

enum class AdmissibilityBranch { MidDimension, LowDimension, OutOfRange };

inline const char* to_string(AdmissibilityBranch b) {
  switch (b) {
    case AdmissibilityBranch::MidDimension: return "2sigma<n<=4sigma";
    case AdmissibilityBranch::LowDimension: return "sigma<n<=2sigma";
    case AdmissibilityBranch::OutOfRange: return "n>4sigma (outside the admissible range)";
  }
  return "?";
}

struct AdmissibilityReport {
  AdmissibilityBranch branch = AdmissibilityBranch::OutOfRange;
  bool p_admissible = false;       // p satisfies the branch constraint
  bool lower_bound_holds = false;  // p > 1 + (sigma + 2 delta)/(n - sigma)
  Rat branch_upper = 0;            // n/(n - 2 sigma) on the mid branch, else unused
};

/// Which regularity branch applies to (n, p) and whether p satisfies it,
/// together with the global-existence lower bound.
inline AdmissibilityReport admissibility(const ExponentQuery& q, const Rat& p) {
  if (!(Rat(q.n) > q.sigma)) throw ValidationError("admissibility: requires n > sigma");
  AdmissibilityReport r;
  const Rat n(q.n);
  if (n > 2 * q.sigma && n <= 4 * q.sigma) {
    r.branch = AdmissibilityBranch::MidDimension;
    r.branch_upper = n / (n - 2 * q.sigma);
    r.p_admissible = (p >= 2 && p <= r.branch_upper);
  } else if (n > q.sigma && n <= 2 * q.sigma) {
    r.branch = AdmissibilityBranch::LowDimension;
    r.p_admissible = (p >= 2);
  } else {
    r.branch = AdmissibilityBranch::OutOfRange;
    r.p_admissible = false;
  }
  r.lower_bound_holds = p > global_lower_bound(q);
  return r;
}

struct NbarResult {
  double value = 0.0;
  double interval_lo = 0.0;  // 3 sigma - 2
  double interval_hi = 0.0;  // 3 sigma - 1
  bool strictly_inside = false;
};

/// nbar(sigma) = (3 sigma - 2) [ 1 + (sqrt(1 + 8 sigma (3 sigma - 2)^{-2}) - 1)/2 ],
/// the dimension threshold below which the oscillatory-model gap was closed.
/// Lies in [3 sigma - 2, 3 sigma - 1], strictly inside for sigma > 1.
inline NbarResult nbar(double sigma) {
  const double base = 3.0 * sigma - 2.0;
  if (!(base > 0.0)) throw ValidationError("nbar: requires sigma > 2/3");
  NbarResult r;
  r.value = base * (1.0 + 0.5 * (std::sqrt(1.0 + 8.0 * sigma / (base * base)) - 1.0));
  r.interval_lo = base;
  r.interval_hi = 3.0 * sigma - 1.0;
  const double tol = 1e-12 * std::max(1.0, std::abs(r.value));
  if (!(r.value >= r.interval_lo - tol && r.value <= r.interval_hi + tol))
    throw NumericalError("nbar: value escaped [3sigma-2, 3sigma-1]");
  r.strictly_inside = r.value > r.interval_lo + tol && r.value < r.interval_hi - tol;
  return r;
}

}  // namespace fracwave
