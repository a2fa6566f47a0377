// Prints the per-mode multiplier and the three majorant norms on a small time
// grid for the default parameters (n = 3, sigma = 1, delta = 1/4).

#include <cstdio>

#include "fracwave/analysis.hpp"
#include "fracwave/propagator.hpp"

int main() {
  using namespace fracwave;
  const int n = 3;
  const double sigma = 1.0, delta = 0.25;
  const auto w = decay_weights(n, sigma, delta);
  std::printf("decay weights: w_u=%g w_energy=%g w_velocity=%g\n", w.w_u, w.w_energy, w.w_velocity);
  std::printf("%10s %14s %14s %14s %14s\n", "t", "|m(t,1)|", "Q(-s,2d)", "Q(0,2d)", "Q(-s+2d,2d)");
  for (double t : log_spaced(1.0, 1e4, 9)) {
    std::printf("%10.1f %14.6e %14.6e %14.6e %14.6e\n", t,
                std::abs(solution_multiplier_main(sigma, delta, t, 1.0)),
                majorant_norm_decay(-sigma, 2 * delta, n, t),
                majorant_norm_decay(0.0, 2 * delta, n, t),
                majorant_norm_decay(-sigma + 2 * delta, 2 * delta, n, t));
  }
  return 0;
}
