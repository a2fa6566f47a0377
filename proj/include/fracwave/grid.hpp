#pragma once

// Periodic lattice on [-L, L)^n approximating R^n. Frequencies are
// xi_k = pi*k/L with k in {-N/2, ..., N/2-1} per axis.

#include <array>
#include <cstdlib>
#include <cstddef>
#include <string>

#include "fracwave/common.hpp"

namespace fracwave {

/// Memory cap for a single field allocation, settable via FRACWAVE_MEM_LIMIT_MB
/// (default 4096 MB). Read once per process.
inline std::size_t field_memory_limit_bytes() {
  static const std::size_t limit = [] {
    std::size_t mb = 4096;
    if (const char* env = std::getenv("FRACWAVE_MEM_LIMIT_MB")) {
      const long v = std::atol(env);
      if (v > 0) mb = static_cast<std::size_t>(v);
    }
    return mb * (std::size_t(1) << 20);
  }();
  return limit;
}

class Grid {
public:
  Grid(int dim, int points_per_axis, double half_width)
      : dim_(dim), n_(points_per_axis), half_width_(half_width) {
    if (dim < 1 || dim > 3) throw ValidationError("Grid: dim must be 1, 2 or 3, got " + std::to_string(dim));
    if (n_ < 4 || (n_ & (n_ - 1)) != 0)
      throw ValidationError("Grid: points_per_axis must be a power of two >= 4, got " + std::to_string(n_));
    if (!(half_width > 0.0)) throw ValidationError("Grid: half_width must be positive");
    total_ = 1;
    for (int d = 0; d < dim_; ++d) total_ *= static_cast<std::size_t>(n_);
    if (total_ * sizeof(Complex) > field_memory_limit_bytes())
      throw ValidationError("Grid: lattice of " + std::to_string(total_) +
                            " points exceeds the FRACWAVE_MEM_LIMIT_MB budget");
  }

  int dim() const { return dim_; }
  int points_per_axis() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2.0 * half_width_ / n_; }
  std::size_t size() const { return total_; }

  /// Cell volume h^n of the lattice.
  double cell_volume() const {
    double v = 1.0;
    for (int d = 0; d < dim_; ++d) v *= spacing();
    return v;
  }

  /// Box volume (2L)^n.
  double box_volume() const {
    double v = 1.0;
    for (int d = 0; d < dim_; ++d) v *= 2.0 * half_width_;
    return v;
  }

  /// Storage index -> per-axis indices in [0, N).
  std::array<int, 3> unravel(std::size_t idx) const {
    std::array<int, 3> a{0, 0, 0};
    for (int d = dim_ - 1; d >= 0; --d) {
      a[d] = static_cast<int>(idx % n_);
      idx /= n_;
    }
    return a;
  }

  /// Signed frequency index for a storage index along one axis.
  int signed_index(int k) const { return k < n_ / 2 ? k : k - n_; }

  /// Physical coordinate of axis index j.
  double coord(int j) const { return -half_width_ + j * spacing(); }

  std::array<double, 3> point(std::size_t idx) const {
    const auto a = unravel(idx);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int d = 0; d < dim_; ++d) x[d] = coord(a[d]);
    return x;
  }

  /// |xi|^2 at a storage index.
  double freq_sq(std::size_t idx) const {
    const auto a = unravel(idx);
    const double base = pi / half_width_;
    double s = 0.0;
    for (int d = 0; d < dim_; ++d) {
      const double xi = base * signed_index(a[d]);
      s += xi * xi;
    }
    return s;
  }

  bool operator==(const Grid& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && half_width_ == o.half_width_;
  }

private:
  int dim_;
  int n_;
  double half_width_;
  std::size_t total_;
};

}  // namespace fracwave
