#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "fracwave/common.hpp"
#include "fracwave/grid.hpp"

namespace fracwave {

namespace detail {

template <class Tag>
class FieldBase {
public:
  FieldBase(Grid grid, std::vector<Complex> data) : grid_(grid), data_(std::move(data)) {
    if (data_.size() != grid_.size()) throw ValidationError("field data size does not match grid");
  }
  explicit FieldBase(Grid grid) : grid_(grid), data_(grid.size(), Complex(0.0, 0.0)) {}

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  std::vector<Complex>& data() { return data_; }
  const std::vector<Complex>& data() const { return data_; }

  bool all_finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

private:
  Grid grid_;
  std::vector<Complex> data_;
};

struct PhysicalTag {};
struct SpectralTag {};

}  // namespace detail

/// Lattice samples of a function of x in [-L, L)^n.
class PhysicalField : public detail::FieldBase<detail::PhysicalTag> {
public:
  using FieldBase::FieldBase;

  /// Sample a scalar function of the physical coordinates.
  static PhysicalField sample(const Grid& g, const std::function<double(const std::array<double, 3>&)>& f) {
    PhysicalField out(g);
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = Complex(f(g.point(i)), 0.0);
    return out;
  }
};

/// Coefficients at the discrete frequencies xi_k = pi*k/L.
class SpectralField : public detail::FieldBase<detail::SpectralTag> {
public:
  using FieldBase::FieldBase;
};

}  // namespace fracwave
