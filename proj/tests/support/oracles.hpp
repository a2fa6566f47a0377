#pragma once

// Test-only oracles, independent of the implementation paths they check:
//  - adaptive Dormand-Prince RK45 integration of the per-mode characteristic
//    equation (reference for the closed-form propagator),
//  - direct O(N^2) discrete Fourier sums (reference for the FFT transforms),
//  - least-squares slope of log-log samples.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

/// Adaptive RK45 (Dormand-Prince) for y' = f(t, y), y in R^m.
/// Integrates to t_end with mixed absolute/relative control.
template <std::size_t M>
std::array<double, M> rk45(const std::function<std::array<double, M>(double, const std::array<double, M>&)>& f,
                           std::array<double, M> y, double t0, double t_end, double rtol = 1e-12,
                           double atol = 1e-14) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double t = t0;
  double h = (t_end - t0) * 1e-3;
  const auto axpy = [](std::array<double, M> base, double w, const std::array<double, M>& v) {
    for (std::size_t i = 0; i < M; ++i) base[i] += w * v[i];
    return base;
  };

  int rejected_in_a_row = 0;
  while (t < t_end) {
    if (t + h > t_end) h = t_end - t;
    const auto k1 = f(t, y);
    const auto k2 = f(t + c2 * h, axpy(y, h * a21, k1));
    auto tmp = axpy(axpy(y, h * a31, k1), h * a32, k2);
    const auto k3 = f(t + c3 * h, tmp);
    tmp = axpy(axpy(axpy(y, h * a41, k1), h * a42, k2), h * a43, k3);
    const auto k4 = f(t + c4 * h, tmp);
    tmp = axpy(axpy(axpy(axpy(y, h * a51, k1), h * a52, k2), h * a53, k3), h * a54, k4);
    const auto k5 = f(t + c5 * h, tmp);
    tmp = axpy(axpy(axpy(axpy(axpy(y, h * a61, k1), h * a62, k2), h * a63, k3), h * a64, k4),
               h * a65, k5);
    const auto k6 = f(t + h, tmp);
    std::array<double, M> y5 = y;
    for (std::size_t i = 0; i < M; ++i)
      y5[i] += h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const auto k7 = f(t + h, y5);

    double err = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (err <= 1.0) {
      t += h;
      y = y5;
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 60) {
      throw std::runtime_error("rk45: repeated step rejection");
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
    if (!(h > 1e-15 * (t_end - t0))) throw std::runtime_error("rk45: step underflow");
  }
  return y;
}

/// Solve v'' + 2 beta v' + (beta^2 + omega^2) v = 0, v(0)=a, v'(0)=b, at time t.
inline std::array<double, 2> damped_mode_reference(double beta, double omega, double a, double b,
                                                   double t, double rtol = 1e-12) {
  if (t == 0.0) return {a, b};
  const double coeff = beta * beta + omega * omega;
  return rk45<2>(
      [&](double, const std::array<double, 2>& y) {
        return std::array<double, 2>{y[1], -2.0 * beta * y[1] - coeff * y[0]};
      },
      {a, b}, 0.0, t, rtol, 1e-300);
}

/// Direct O(N^2) evaluation of F(xi_k) = h * sum_j f(x_j) e^{-i x_j xi_k} in 1d.
inline std::vector<std::complex<double>> direct_forward_1d(const std::vector<std::complex<double>>& f,
                                                           double half_width) {
  const std::size_t n = f.size();
  const double h = 2.0 * half_width / double(n);
  std::vector<std::complex<double>> out(n);
  for (std::size_t ks = 0; ks < n; ++ks) {
    const long k = ks < n / 2 ? long(ks) : long(ks) - long(n);
    const double xi = 3.141592653589793238462643383279502884 * double(k) / half_width;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = -half_width + double(j) * h;
      acc += f[j] * std::exp(std::complex<double>(0.0, -x * xi));
    }
    out[ks] = h * acc;
  }
  return out;
}

/// Least-squares slope of log(y) against log(1+x).
inline double loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    const double lx = std::log1p(x), ly = std::log(y);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  const double n = double(pts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracles
