#pragma once

// Discrete Fourier machinery on the periodic box, built on FFTW (c2c).
//
// Normalization (fixed once, used everywhere):
//   forward:  F(xi_k) = h^n * sum_j f(x_j) exp(-i x_j . xi_k)   ~ integral of f e^{-i x.xi} dx
//   inverse:  f(x_j)  = (2L)^{-n} * sum_k F(xi_k) exp(+i x_j . xi_k)
//   Plancherel: h^n sum |f_j|^2 = (2L)^{-n} sum |F_k|^2
// so spectral sums approximate R^n integrals with the (2pi)^{-n} measure on
// the frequency side. The phase factor (-1)^{k1+...+kn} converts FFTW's
// 0-based DFT to the box origin at x = -L.

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "fracwave/field.hpp"

namespace fracwave {
namespace detail {

class FftPlan {
public:
  FftPlan(const Grid& g, int sign) {
    scratch_in_.resize(g.size());
    scratch_out_.resize(g.size());
    int dims[3] = {g.points_per_axis(), g.points_per_axis(), g.points_per_axis()};
    plan_ = fftw_plan_dft(g.dim(), dims,
                          reinterpret_cast<fftw_complex*>(scratch_in_.data()),
                          reinterpret_cast<fftw_complex*>(scratch_out_.data()),
                          sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw NumericalError("fftw_plan_dft failed");
  }
  ~FftPlan() { fftw_destroy_plan(plan_); }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void execute(const Complex* in, Complex* out) const {
    // fftw_execute_dft is thread-safe; only planning needs the lock.
    fftw_execute_dft(plan_,
                     reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

private:
  fftw_plan plan_;
  std::vector<Complex> scratch_in_, scratch_out_;
};

inline const FftPlan& cached_plan(const Grid& g, int sign) {
  using Key = std::tuple<int, int, int>;
  static std::map<Key, std::unique_ptr<FftPlan>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const Key key{g.dim(), g.points_per_axis(), sign};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<FftPlan>(g, sign)).first;
  return *it->second;
}

/// Parity of the sum of storage indices; equals the parity of the sum of
/// signed frequency indices since N is even.
inline bool odd_parity(const Grid& g, std::size_t idx) {
  int s = 0;
  const auto a = g.unravel(idx);
  for (int d = 0; d < g.dim(); ++d) s += a[d];
  return (s & 1) != 0;
}

}  // namespace detail

inline SpectralField forward_transform(const PhysicalField& f) {
  if (!f.all_finite()) throw NumericalError("forward_transform: non-finite input field");
  const Grid& g = f.grid();
  SpectralField out(g);
  detail::cached_plan(g, FFTW_FORWARD).execute(f.data().data(), out.data().data());
  const double scale = g.cell_volume();
  for (std::size_t i = 0; i < g.size(); ++i)
    out[i] *= detail::odd_parity(g, i) ? -scale : scale;
  return out;
}

inline PhysicalField inverse_transform(const SpectralField& F) {
  if (!F.all_finite()) throw NumericalError("inverse_transform: non-finite input field");
  const Grid& g = F.grid();
  PhysicalField tmp(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    tmp[i] = detail::odd_parity(g, i) ? -F[i] : F[i];
  PhysicalField out(g);
  detail::cached_plan(g, FFTW_BACKWARD).execute(tmp.data().data(), out.data().data());
  const double scale = 1.0 / g.box_volume();
  for (auto& v : out.data()) v *= scale;
  return out;
}

}  // namespace fracwave
