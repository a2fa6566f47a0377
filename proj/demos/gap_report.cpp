// Prints the blow-up / global-existence exponent gap across dimensions for a
// given (sigma, delta), in exact rational arithmetic.

#include <cstdio>

#include "fracwave/exponents.hpp"

int main(int argc, char** argv) {
  using namespace fracwave;
  const double sigma = argc > 1 ? std::atof(argv[1]) : 1.0;
  const double delta = argc > 2 ? std::atof(argv[2]) : 0.25;
  std::printf("sigma = %g, delta = %g\n", sigma, delta);
  std::printf("%4s %16s %16s %12s\n", "n", "p_blowup", "p_global", "gap_width");
  for (int n = 2; n <= 8; ++n) {
    ExponentQuery q{n, rat_from_double(sigma), rat_from_double(delta), 1, 2};
    if (!(Rat(n) > q.sigma) || !(Rat(n) > 2 * q.delta)) continue;
    const Rat lo = blowup_upper_bound(q);
    const Rat hi = global_lower_bound(q);
    std::printf("%4d %16s %16s %12.6f\n", n, to_string(lo).c_str(), to_string(hi).c_str(),
                to_double(hi - lo));
  }
  const auto nb = nbar(std::max(1.0, sigma));
  std::printf("nbar(%g) = %.6f in [%g, %g]\n", std::max(1.0, sigma), nb.value, nb.interval_lo,
              nb.interval_hi);
  return 0;
}
