#pragma once

// Shared small utilities: error categories, stable scalar kernels, and the
// deterministic RNG used by experiment drivers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracwave {

using Complex = std::complex<double>;

// Error categories map onto CLI exit codes (2/3/4).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// sin(omega*t)/omega with the removable singularity at omega*t -> 0 evaluated
/// by its Taylor branch. Switch point 1e-4 keeps the truncation below 1e-12.
inline double stable_sinc(double omega, double t) {
  const double z = omega * t;
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return t * (1.0 - z2 / 6.0 + z2 * z2 / 120.0);
  }
  return std::sin(z) / omega;
}

/// exp(a) - exp(b) without cancellation when a ~ b.
inline double exp_diff(double a, double b) { return std::exp(b) * std::expm1(a - b); }

/// Deterministic 64-bit generator (xoshiro256**). std::uniform_real_distribution
/// is implementation-defined, so uniform doubles are derived by hand to keep
/// emitted tables byte-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 seeding
    std::uint64_t x = seed;
    for (auto& si : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      si = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace fracwave
