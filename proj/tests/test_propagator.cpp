#include <catch2/catch_amalgamated.hpp>

#include "fracwave/propagator.hpp"
#include "support/oracles.hpp"

using namespace fracwave;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
std::vector<double> log_spaced_probe() {
  std::vector<double> ts;
  for (int i = 0; i < 30; ++i) ts.push_back(std::pow(10.0, -2.0 + 5.0 * i / 29.0));
  return ts;
}
}  // namespace

TEST_CASE("zero mode is the free particle") {
  const Grid g(1, 16, 2.0);
  SpectralField u(g), v(g);
  u[0] = 1.0;  // (a, b) = (1, 0) at xi = 0
  CauchyState st(u, v);
  const CauchyState out = propagate_state(st, 1.0, 0.25, 5.0);
  REQUIRE(out.displacement[0] == Complex(1.0, 0.0));
  REQUIRE(out.velocity[0] == Complex(0.0, 0.0));

  SpectralField u2(g), v2(g);
  v2[0] = 2.0;  // (a, b) = (0, 2): drift
  const CauchyState out2 = propagate_state(CauchyState(u2, v2), 1.0, 0.25, 3.0);
  REQUIRE_THAT(out2.displacement[0].real(), WithinRel(6.0, 1e-15));
  REQUIRE_THAT(out2.velocity[0].real(), WithinRel(2.0, 1e-15));
}

TEST_CASE("unit-velocity initial data reproduces the solution multiplier") {
  const Grid g(1, 64, pi);  // integer frequencies
  SpectralField u(g), v(g);
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = 1.0;
  const double sigma = 1.3, delta = 0.45, dt = 0.8;
  const CauchyState out = propagate_state(CauchyState(u, v), sigma, delta, dt);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = std::sqrt(g.freq_sq(i));
    REQUIRE_THAT(out.displacement[i].real(),
                 WithinAbs(solution_multiplier_main(sigma, delta, dt, r), 1e-14));
    REQUIRE_THAT(out.velocity[i].real(),
                 WithinAbs(velocity_multiplier(sigma, delta, dt, r), 1e-14));
  }
}

TEST_CASE("quarter-period displacement at |xi| = 1 matches the ODE oracle") {
  const double sigma = 1.0, delta = 0.25;
  // beta = omega = 1: v(pi/2) = e^{-pi/2} sin(pi/2)
  const auto ref = oracles::damped_mode_reference(1.0, 1.0, 0.0, 1.0, pi / 2);
  REQUIRE_THAT(solution_multiplier_main(sigma, delta, pi / 2, 1.0), WithinRel(ref[0], 1e-8));
  REQUIRE_THAT(solution_multiplier_main(sigma, delta, pi / 2, 1.0),
               WithinRel(std::exp(-pi / 2), 1e-12));
}

TEST_CASE("velocity multiplier examples") {
  for (double r : {0.0, 0.4, 3.0}) REQUIRE(velocity_multiplier(1.0, 0.25, 0.0, r) == 1.0);
  REQUIRE(velocity_multiplier(1.0, 0.25, 7.0, 0.0) == 1.0);
  REQUIRE_THAT(velocity_multiplier(2.0, 0.5, 1.0, 1.0),
               WithinRel(std::exp(-1.0) * (std::cos(1.0) - std::sin(1.0)), 1e-12));
}

TEST_CASE("propagation composes exactly (semigroup in dt)") {
  const Grid g(1, 128, 5.0);
  Rng rng(13);
  SpectralField u(g), v(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    u[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    v[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  }
  const CauchyState st(u, v);
  const double sigma = 1.0, delta = 0.25;
  const CauchyState once = propagate_state(st, sigma, delta, 1.7);
  const CauchyState twice = propagate_state(propagate_state(st, sigma, delta, 0.9), sigma, delta, 0.8);
  for (std::size_t i = 0; i < g.size(); ++i) {
    REQUIRE(std::abs(once.displacement[i] - twice.displacement[i]) <=
            1e-10 * std::max(1.0, std::abs(once.displacement[i])));
    REQUIRE(std::abs(once.velocity[i] - twice.velocity[i]) <=
            1e-10 * std::max(1.0, std::abs(once.velocity[i])));
  }
}

TEST_CASE("200 random modes match adaptive ODE integration at t = 1 and t = 10") {
  Rng rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const double sigma = rng.uniform(1.0, 2.2);
    const double delta = 0.5 * sigma * rng.uniform(0.05, 0.95);
    const double r = rng.uniform(0.05, 1.5);
    const double beta = std::pow(r, 2.0 * delta);
    const double omega = std::pow(r, sigma);
    for (double t : {1.0, 10.0}) {
      const auto ref = oracles::damped_mode_reference(beta, omega, 0.0, 1.0, t);
      const double disp = solution_multiplier_main(sigma, delta, t, r);
      const double vel = velocity_multiplier(sigma, delta, t, r);
      const double scale = std::max({std::abs(ref[0]), std::abs(ref[1]), 1e-280});
      CAPTURE(sigma, delta, r, t);
      REQUIRE(std::abs(disp - ref[0]) <= 1e-8 * scale);
      REQUIRE(std::abs(vel - ref[1]) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("propagator rejects the wrong parameter ordering") {
  const Grid g(1, 16, 1.0);
  const CauchyState st = CauchyState::rest(g);
  REQUIRE_THROWS_AS(propagate_state(st, 1.0, 0.5, 0.1), ValidationError);   // 2delta = sigma
  REQUIRE_THROWS_AS(propagate_state(st, 1.0, 0.75, 0.1), ValidationError);  // 2delta > sigma
  REQUIRE_THROWS_AS(propagate_state(st, 1.0, 0.25, -1.0), ValidationError);
}

TEST_CASE("decay weights") {
  {
    const auto w = decay_weights(3, 1.0, 0.25);
    REQUIRE_THAT(w.w_u, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(w.w_energy, WithinAbs(3.0, 1e-15));
    REQUIRE_THAT(w.w_delta, WithinAbs(2.0, 1e-15));
    REQUIRE(w.w_velocity == w.w_delta);
    REQUIRE(w.solution_decay_guaranteed);
  }
  {
    const auto w = decay_weights(2, 1.0, 0.25);  // n = 2 sigma: boundary
    REQUIRE(w.w_u == 0.0);
    REQUIRE_FALSE(w.solution_decay_guaranteed);
  }
  {
    // boundary case 2 delta = sigma: the delta-energy and velocity rates
    // coincide with the full energy rate
    const auto w = decay_weights(4, 1.0, 0.5);
    REQUIRE_THAT(w.w_u, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(w.w_energy, WithinAbs(2.0, 1e-15));
    REQUIRE_THAT(w.w_delta, WithinAbs(2.0, 1e-15));
  }
  REQUIRE_THROWS_AS(decay_weights(3, 1.0, 0.0), ValidationError);
  // ordering w_energy > w_delta > w_u whenever sigma > 2 delta
  const auto w = decay_weights(5, 1.6, 0.3);
  REQUIRE(w.w_energy > w.w_delta);
  REQUIRE(w.w_delta > w.w_u);
}

TEST_CASE("majorant quadrature: exact endpoint, closed form, planted slope") {
  REQUIRE_THAT(majorant_norm_decay(0.0, 1.0, 1, 0.0), WithinRel(1.0, 1e-12));

  // a = 0, b = 2, n = 1: Q(t)^2 = sqrt(pi/(8t)) erf(sqrt(2t))
  for (double t : {50.0, 500.0}) {
    const double expected = std::sqrt(std::sqrt(pi / (8.0 * t)) * std::erf(std::sqrt(2.0 * t)));
    REQUIRE_THAT(majorant_norm_decay(0.0, 2.0, 1, t), WithinRel(expected, 1e-9));
  }

  // a = -1, b = 1/2, n = 3: log-log slope -(n+2a)/(2b) = -1
  std::vector<std::pair<double, double>> samples;
  for (double t : {1e2, 3e2, 1e3, 3e3, 1e4})
    samples.emplace_back(t, majorant_norm_decay(-1.0, 0.5, 3, t));
  REQUIRE_THAT(oracles::loglog_slope(samples), WithinAbs(-1.0, 0.05));

  REQUIRE_THROWS_AS(majorant_norm_decay(-0.5, 1.0, 1, 1.0), ValidationError);  // n + 2a = 0
  REQUIRE_THROWS_AS(majorant_norm_decay(0.0, 0.0, 1, 1.0), ValidationError);   // b = 0
}

TEST_CASE("majorant is nonincreasing in t") {
  double prev = std::numeric_limits<double>::infinity();
  for (double t : log_spaced_probe()) {
    const double q = majorant_norm_decay(-1.0, 0.5, 3, t);
    REQUIRE(q <= prev * (1.0 + 1e-12));
    prev = q;
  }
}

TEST_CASE("true multiplier is dominated by its majorant") {
  const double sigma = 1.0, delta = 0.25;
  for (double t : log_spaced_probe()) {
    const double lhs = multiplier_lowfreq_l2(sigma, delta, 3, t);
    const double rhs = majorant_norm_decay(-sigma, 2.0 * delta, 3, t);
    REQUIRE(lhs <= rhs * (1.0 + 1e-10));
  }
}

TEST_CASE("sup bound |m(t,r)| <= t holds pointwise") {
  Rng rng(99);
  for (int i = 0; i < 10000; ++i) {
    const double t = rng.uniform(0.0, 100.0);
    const double r = rng.uniform(1e-9, 10.0);
    REQUIRE(std::abs(solution_multiplier_main(1.0, 0.25, t, r)) <= t);
  }
}
