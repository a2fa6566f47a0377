#pragma once

// Fractional Laplacian symbols and the norms used by every other module.

#include <algorithm>
#include <cmath>

#include "fracwave/fft.hpp"

namespace fracwave {

/// Multiply coefficients by |xi|^{2s}. The xi = 0 symbol is 0 for s > 0 and 1
/// for s = 0 (the limit of |xi|^{2s}).
inline SpectralField apply_fractional_laplacian(const SpectralField& f, double s) {
  if (s < 0.0) throw ValidationError("apply_fractional_laplacian: order s must be nonnegative");
  if (s == 0.0) return f;
  const Grid& g = f.grid();
  SpectralField out(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double q = g.freq_sq(i);
    out[i] = q == 0.0 ? Complex(0.0, 0.0) : f[i] * std::pow(q, s);
  }
  return out;
}

/// Spectral-side L2 norm, equal to the physical L2 norm under the fixed
/// normalization (discrete Plancherel).
inline double spectral_l2_norm(const SpectralField& F) {
  double s = 0.0;
  for (const auto& v : F.data()) s += std::norm(v);
  return std::sqrt(s / F.grid().box_volume());
}

/// Weighted spectral L2 norm with weight |xi|^{2s}, i.e. the L2 norm of
/// (-Delta)^{s/2} applied to the underlying physical field.
inline double spectral_sobolev_seminorm(const SpectralField& F, double s) {
  if (s < 0.0) throw ValidationError("sobolev_seminorm: order s must be nonnegative");
  const Grid& g = F.grid();
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double q = g.freq_sq(i);
    const double w = s == 0.0 ? 1.0 : (q == 0.0 ? 0.0 : std::pow(q, s));
    acc += w * std::norm(F[i]);
  }
  return std::sqrt(acc / g.box_volume());
}

inline double sobolev_seminorm(const PhysicalField& f, double s) {
  if (s < 0.0) throw ValidationError("sobolev_seminorm: order s must be nonnegative");
  return spectral_sobolev_seminorm(forward_transform(f), s);
}

/// Lattice Riemann sum for the L^q norm; q = infinity returns the max modulus.
inline double lp_norm(const PhysicalField& f, double q) {
  if (!f.all_finite()) throw NumericalError("lp_norm: non-finite input field");
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& v : f.data()) m = std::max(m, std::abs(v));
    return m;
  }
  if (q < 1.0) throw ValidationError("lp_norm: exponent q must be >= 1");
  double s = 0.0;
  const long twice_q = std::lround(2.0 * q);
  if (q == 2.0) {
    for (const auto& v : f.data()) s += std::norm(v);
  } else if (twice_q == 2.0 * q && twice_q <= 16) {
    // integer / half-integer exponents by repeated multiplication
    const long whole = twice_q / 2;
    const bool half = (twice_q & 1) != 0;
    for (const auto& v : f.data()) {
      const double x = std::abs(v);
      double acc = half ? std::sqrt(x) : 1.0;
      for (long k = 0; k < whole; ++k) acc *= x;
      s += acc;
    }
  } else {
    for (const auto& v : f.data()) s += std::pow(std::abs(v), q);
  }
  return std::pow(f.grid().cell_volume() * s, 1.0 / q);
}

/// Lattice approximation of the integral of f over the box.
inline double lattice_integral(const PhysicalField& f) {
  double s = 0.0;
  for (const auto& v : f.data()) s += v.real();
  return s * f.grid().cell_volume();
}

/// Lattice inner product h^n sum f_j g_j (no conjugation; real-field use).
inline double lattice_product_sum(const PhysicalField& f, const PhysicalField& g) {
  if (!(f.grid() == g.grid())) throw ValidationError("lattice_product_sum: grid mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i].real() * g[i].real();
  return s * f.grid().cell_volume();
}

/// (-Delta)^s f for a physical field, round trip through frequency space.
inline PhysicalField fractional_laplacian(const PhysicalField& f, double s) {
  return inverse_transform(apply_fractional_laplacian(forward_transform(f), s));
}

}  // namespace fracwave
