#pragma once

// Adaptive 1D quadrature used for radial norms, the convolution inequality
// curves, and test oracles. Thin wrapper over Gauss-Kronrod from Boost.Math.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "fracwave/common.hpp"

namespace fracwave {

/// Integrate f over [a, b] to relative tolerance tol.
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol);
}

/// Integral of r^gamma * w(r) over [0, 1] for gamma > -1 and bounded smooth w.
/// A negative gamma is removed by the substitution r = v^{1/(1+gamma)}, which
/// maps the integrable endpoint singularity to a bounded integrand.
template <class W>
double integrate_radial_power(double gamma, const W& w, double tol = 1e-10) {
  if (gamma <= -1.0) throw ValidationError("integrate_radial_power: divergent endpoint, gamma <= -1");
  if (gamma >= 0.0) {
    return integrate([&](double r) { return std::pow(r, gamma) * w(r); }, 0.0, 1.0, tol);
  }
  const double q = 1.0 + gamma;
  return integrate([&](double v) { return w(std::pow(v, 1.0 / q)) / q; }, 0.0, 1.0, tol);
}

}  // namespace fracwave
