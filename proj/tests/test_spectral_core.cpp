#include <catch2/catch_amalgamated.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fracwave/spectral_ops.hpp"
#include "support/oracles.hpp"

using namespace fracwave;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PhysicalField random_real_field(const Grid& g, std::uint64_t seed) {
  Rng rng(seed);
  PhysicalField f(g);
  for (auto& v : f.data()) v = Complex(rng.uniform(-1.0, 1.0), 0.0);
  return f;
}

double quad(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-13);
}

}  // namespace

TEST_CASE("constant field transforms to a pure zero mode") {
  const Grid g(2, 16, 5.0);
  PhysicalField f(g);
  for (auto& v : f.data()) v = 1.0;
  const SpectralField F = forward_transform(f);
  // zero frequency lives at storage index 0
  REQUIRE_THAT(F[0].real(), WithinRel(g.box_volume(), 1e-12));
  double off = 0.0;
  for (std::size_t i = 1; i < F.size(); ++i) off = std::max(off, std::abs(F[i]));
  REQUIRE(off < 1e-12 * g.box_volume());
}

TEST_CASE("pure mode exp(i pi x / L) concentrates at k = 1") {
  const Grid g(1, 64, 7.0);
  PhysicalField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i)[0];
    f[i] = std::exp(Complex(0.0, pi * x / g.half_width()));
  }
  const SpectralField F = forward_transform(f);
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (i == 1)
      REQUIRE_THAT(F[i].real(), WithinRel(2.0 * g.half_width(), 1e-12));
    else
      REQUIRE(std::abs(F[i]) < 1e-11);
  }
}

TEST_CASE("forward transform matches the direct discrete Fourier sum") {
  const Grid g(1, 32, 3.0);
  const PhysicalField f = random_real_field(g, 11);
  const SpectralField F = forward_transform(f);
  const auto direct = oracles::direct_forward_1d(f.data(), g.half_width());
  for (std::size_t i = 0; i < F.size(); ++i)
    REQUIRE(std::abs(F[i] - direct[i]) <= 1e-12 * std::abs(direct[i]) + 1e-12);
}

TEST_CASE("round trip is the identity to 1e-12 on random fields") {
  for (int dim : {1, 2, 3}) {
    const Grid g(dim, dim == 3 ? 8 : 32, 4.0);
    const PhysicalField f = random_real_field(g, 29 + dim);
    const PhysicalField back = inverse_transform(forward_transform(f));
    for (std::size_t i = 0; i < g.size(); ++i)
      REQUIRE(std::abs(back[i] - f[i]) < 1e-12);
  }
}

TEST_CASE("discrete Plancherel identity") {
  const Grid g(2, 32, 2.5);
  const PhysicalField f = random_real_field(g, 5);
  REQUIRE_THAT(spectral_l2_norm(forward_transform(f)), WithinRel(lp_norm(f, 2.0), 1e-12));
}

TEST_CASE("transform rejects non-finite input") {
  const Grid g(1, 16, 1.0);
  PhysicalField f(g);
  f[3] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  REQUIRE_THROWS_AS(forward_transform(f), NumericalError);
}

TEST_CASE("fractional laplacian: s = 0 is the identity, including at xi = 0") {
  const Grid g(1, 32, 2.0);
  const SpectralField F = forward_transform(random_real_field(g, 3));
  const SpectralField out = apply_fractional_laplacian(F, 0.0);
  for (std::size_t i = 0; i < F.size(); ++i) REQUIRE(out[i] == F[i]);
}

TEST_CASE("fractional laplacian scales a pure mode by |xi|^{2s}") {
  const Grid g(1, 32, pi);  // xi_k = k on this box
  PhysicalField f(g);
  for (std::size_t i = 0; i < g.size(); ++i)
    f[i] = std::exp(Complex(0.0, 2.0 * g.point(i)[0]));
  const SpectralField F = forward_transform(f);
  const SpectralField out = apply_fractional_laplacian(F, 1.0);
  REQUIRE_THAT(out[2].real(), WithinRel(4.0 * F[2].real(), 1e-12));
}

TEST_CASE("fractional laplacian composes additively in the order") {
  const Grid g(1, 64, 3.0);
  const SpectralField F = forward_transform(random_real_field(g, 17));
  const double a = 0.35, b = 0.9;
  const SpectralField two_step = apply_fractional_laplacian(apply_fractional_laplacian(F, a), b);
  const SpectralField one_step = apply_fractional_laplacian(F, a + b);
  for (std::size_t i = 0; i < F.size(); ++i)
    REQUIRE(std::abs(two_step[i] - one_step[i]) <= 1e-12 * std::abs(one_step[i]) + 1e-14);
}

TEST_CASE("fractional laplacian rejects negative order") {
  const Grid g(1, 16, 1.0);
  REQUIRE_THROWS_AS(apply_fractional_laplacian(SpectralField(g), -0.5), ValidationError);
  REQUIRE_THROWS_AS(sobolev_seminorm(PhysicalField(g), -1.0), ValidationError);
}

TEST_CASE("sobolev seminorm: zero field and pure-mode Plancherel") {
  const Grid g(2, 16, 3.0);
  REQUIRE(sobolev_seminorm(PhysicalField(g), 0.7) == 0.0);

  const double A = 2.5;
  PhysicalField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto x = g.point(i);
    f[i] = A * std::exp(Complex(0.0, pi * (x[0] + 2.0 * x[1]) / g.half_width()));
  }
  REQUIRE_THAT(sobolev_seminorm(f, 0.0), WithinRel(A * std::pow(2.0 * g.half_width(), 1.0), 1e-10));
}

TEST_CASE("sobolev seminorm of a Gaussian matches the gradient-norm quadrature") {
  const Grid g(1, 512, 15.0);
  const PhysicalField f = PhysicalField::sample(
      g, [](const std::array<double, 3>& x) { return std::exp(-x[0] * x[0]); });
  // |f'|^2 = 4 x^2 e^{-2x^2}, integrated by the independent quadrature oracle
  const double expected = std::sqrt(
      quad([](double x) { return 4.0 * x * x * std::exp(-2.0 * x * x); }, -15.0, 15.0));
  REQUIRE_THAT(sobolev_seminorm(f, 1.0), WithinRel(expected, 1e-6));
}

TEST_CASE("lp norm: zero, plateau measure, Gaussian L4 vs quadrature") {
  const Grid g(1, 1024, 10.0);
  REQUIRE(lp_norm(PhysicalField(g), 3.0) == 0.0);

  PhysicalField plateau(g);
  const double a = 2.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    plateau[i] = std::abs(g.point(i)[0]) <= a ? 1.0 : 0.0;
  REQUIRE_THAT(lp_norm(plateau, 1.0), WithinAbs(2.0 * a, 2.0 * g.spacing()));

  const PhysicalField f = PhysicalField::sample(
      g, [](const std::array<double, 3>& x) { return std::exp(-x[0] * x[0]); });
  const double expected =
      std::pow(quad([](double x) { return std::exp(-4.0 * x * x); }, -10.0, 10.0), 0.25);
  REQUIRE_THAT(lp_norm(f, 4.0), WithinRel(expected, 1e-6));

  REQUIRE_THAT(lp_norm(f, std::numeric_limits<double>::infinity()), WithinRel(1.0, 1e-12));
  REQUIRE_THROWS_AS(lp_norm(f, 0.5), ValidationError);
}

TEST_CASE("exchange identity: the fractional laplacian is lattice self-adjoint") {
  const Grid g(1, 128, 5.0);
  const PhysicalField f = random_real_field(g, 41);
  const PhysicalField gfield = random_real_field(g, 43);
  for (double s : {0.3, 1.0, 1.7}) {
    const double lhs = lattice_product_sum(fractional_laplacian(f, s), gfield);
    const double rhs = lattice_product_sum(f, fractional_laplacian(gfield, s));
    REQUIRE_THAT(lhs, WithinRel(rhs, 1e-10));
  }
}

TEST_CASE("conjugate-free Parseval pairing holds for real even data") {
  // For real even fields both transforms are real, so the pairing without a
  // conjugate agrees with the measure-weighted Plancherel sum.
  const Grid g(1, 256, 8.0);
  const PhysicalField f = PhysicalField::sample(
      g, [](const std::array<double, 3>& x) { return std::exp(-x[0] * x[0]); });
  const PhysicalField w = PhysicalField::sample(
      g, [](const std::array<double, 3>& x) { return std::cos(x[0]) * std::exp(-0.5 * x[0] * x[0]); });
  const SpectralField F = forward_transform(f);
  const SpectralField W = forward_transform(w);
  Complex spectral(0.0, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) spectral += F[i] * W[i];  // no conjugation
  spectral /= g.box_volume();
  REQUIRE_THAT(spectral.real(), WithinRel(lattice_product_sum(f, w), 1e-10));
  REQUIRE(std::abs(spectral.imag()) < 1e-12);
}

TEST_CASE("grid rejects bad parameters and enforces the memory budget") {
  REQUIRE_THROWS_AS(Grid(4, 16, 1.0), ValidationError);
  REQUIRE_THROWS_AS(Grid(1, 48, 1.0), ValidationError);
  REQUIRE_THROWS_AS(Grid(1, 2, 1.0), ValidationError);
  REQUIRE_THROWS_AS(Grid(1, 16, -1.0), ValidationError);
  REQUIRE_THROWS_AS(Grid(3, 8192, 1.0), ValidationError);  // 8192^3 exceeds any sane budget
}
