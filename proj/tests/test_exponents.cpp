#include <catch2/catch_amalgamated.hpp>

#include "fracwave/exponents.hpp"
#include "fracwave/functionals.hpp"

using namespace fracwave;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("shared diffusion exponent 1 + 2 m sigma / n") {
  REQUIRE(fujita_m({2, 1, 0, 1, 2}) == 2);
  REQUIRE(fujita_m({1, 1, 0, 1, 2}) == 3);
  REQUIRE(fujita_m({4, 1, 0, 2, 2}) == 2);  // m = 2, n = 4 sigma
  REQUIRE(fujita_m({5, Rat(3, 2), 0, Rat(3, 2), 2}) == 1 + 2 * Rat(3, 2) * Rat(3, 2) / 5);
  REQUIRE_THROWS_AS(fujita_m({2, 1, 0, 3, 2}), ValidationError);
  REQUIRE_THROWS_AS(fujita_m({2, 1, 0, Rat(1, 2), 2}), ValidationError);
}

TEST_CASE("structural-damping exponent and its collapses") {
  REQUIRE(fujita_structural({3, 1, Rat(1, 2), 1, 2}) == 2);
  REQUIRE(fujita_structural({4, 1, Rat(1, 4), 1, 2}) == Rat(11, 7));
  // delta = 0 collapses to the m = 1 diffusion exponent
  for (int n : {1, 2, 5}) REQUIRE(fujita_structural({n, 2, 0, 1, 2}) == fujita_m({n, 2, 0, 1, 2}));
  // delta = sigma / 2 collapses to 1 + 2 sigma / (n - sigma)
  for (int n : {2, 3, 7}) {
    const Rat sigma(3, 2);
    REQUIRE(fujita_structural({n, sigma, sigma / 2, 1, 2}) == 1 + 2 * sigma / (n - sigma));
  }
  REQUIRE_THROWS_AS(fujita_structural({1, 1, Rat(1, 2), 1, 2}), ValidationError);  // n = 2 delta
}

TEST_CASE("global-existence lower bound") {
  REQUIRE(global_lower_bound({3, 1, Rat(1, 4), 1, 2}) == Rat(7, 4));
  REQUIRE(global_lower_bound({4, 2, Rat(1, 2), 1, 2}) == Rat(5, 2));
  // delta -> sigma/2 meets the oscillatory-model exponent
  const Rat sigma = 1;
  REQUIRE(global_lower_bound({3, sigma, sigma / 2, 1, 2}) == 1 + 2 * sigma / (3 - sigma));
  REQUIRE_THROWS_AS(global_lower_bound({1, 1, Rat(1, 4), 1, 2}), ValidationError);  // n = sigma
}

TEST_CASE("blow-up upper bound") {
  REQUIRE(blowup_upper_bound({3, 1, Rat(1, 4), 1, 2}) == Rat(7, 5));
  REQUIRE(blowup_upper_bound({1, 1, Rat(1, 4), 1, 2}) == 3);
  REQUIRE(blowup_upper_bound({3, 1, 0, 1, 2}) == 1);  // empty subcritical range at delta = 0
  REQUIRE_THROWS_AS(blowup_upper_bound({2, 1, 1, 1, 2}), ValidationError);
}

TEST_CASE("gap intervals") {
  {
    const auto g = gap({3, 1, Rat(1, 4), 1, 2});
    REQUIRE(g.main_gap_lower == Rat(7, 5));
    REQUIRE(g.main_gap_upper == Rat(7, 4));
    REQUIRE_FALSE(g.main_empty);
  }
  {
    // delta = sigma/2: the oscillatory-interval endpoints coincide
    const auto g = gap({3, 1, Rat(1, 2), 1, 2});
    REQUIRE(g.lower == g.upper);
    REQUIRE(g.oscillatory_empty);
  }
  {
    const auto g = gap({10, 1, Rat(9, 20), 1, 2});
    REQUIRE(g.main_gap_lower == Rat(109, 91));
    REQUIRE(g.main_gap_upper == Rat(109, 90));
    REQUIRE_THAT(to_double(g.main_gap_lower), WithinAbs(1.1978, 1e-4));
    REQUIRE_THAT(to_double(g.main_gap_upper), WithinAbs(1.2111, 1e-4));
    REQUIRE_FALSE(g.main_empty);
  }
  REQUIRE_THROWS_AS(gap({1, 1, Rat(1, 4), 1, 2}), ValidationError);
}

TEST_CASE("gap is nonempty whenever 2 delta < sigma and n > 2 sigma") {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const Rat sigma(2 + int(rng.uniform() * 30.0), 1 + int(rng.uniform() * 15.0));
    Rat delta = sigma / 2 * Rat(1 + int(rng.uniform() * 18.0), 20);
    if (!(2 * delta < sigma)) delta = sigma / 4;
    int n = 1 + int(rng.uniform() * 12.0);
    while (!(Rat(n) > 2 * sigma)) ++n;
    const ExponentQuery q{n, sigma, delta, 1, 2};
    REQUIRE(blowup_upper_bound(q) < global_lower_bound(q));
  }
}

TEST_CASE("admissibility branches") {
  {
    const auto r = admissibility({3, 1, Rat(1, 4), 1, 2}, Rat(5, 2));
    REQUIRE(r.branch == AdmissibilityBranch::MidDimension);
    REQUIRE(r.branch_upper == 3);
    REQUIRE(r.p_admissible);
    REQUIRE(r.lower_bound_holds);  // 5/2 > 7/4
  }
  {
    const auto r = admissibility({2, 1, Rat(1, 4), 1, 2}, 100);
    REQUIRE(r.branch == AdmissibilityBranch::LowDimension);
    REQUIRE(r.p_admissible);
  }
  {
    const auto r = admissibility({5, 1, Rat(1, 4), 1, 2}, 2);
    REQUIRE(r.branch == AdmissibilityBranch::OutOfRange);
    REQUIRE_FALSE(r.p_admissible);
  }
  REQUIRE_THROWS_AS(admissibility({1, 1, 0, 1, 2}, 2), ValidationError);
}

TEST_CASE("dimension threshold nbar") {
  {
    const auto r = nbar(2.0);
    REQUIRE_THAT(r.value, WithinAbs(2.0 + 2.0 * std::sqrt(2.0), 1e-12));
    REQUIRE(r.value > 4.0);
    REQUIRE(r.value < 5.0);
    REQUIRE(r.strictly_inside);
  }
  {
    // sigma = 1 sits exactly on the upper boundary of (1, 2) and is flagged
    const auto r = nbar(1.0);
    REQUIRE_THAT(r.value, WithinAbs(2.0, 1e-13));
    REQUIRE_FALSE(r.strictly_inside);
  }
  {
    // closed form (3 sigma - 2 + sqrt((3 sigma - 2)^2 + 8 sigma)) / 2
    const auto r = nbar(3.0);
    REQUIRE_THAT(r.value, WithinAbs(0.5 * (7.0 + std::sqrt(73.0)), 1e-12));
    REQUIRE_THAT(r.value, WithinAbs(7.772, 1e-3));
    REQUIRE(r.value > 7.0);
    REQUIRE(r.value < 8.0);
  }
  REQUIRE_THROWS_AS(nbar(0.5), ValidationError);
  // dense membership over sigma in [1, 10]
  for (int i = 0; i <= 900; ++i) {
    const double s = 1.0 + 0.01 * i;
    const auto r = nbar(s);
    REQUIRE(r.value >= r.interval_lo - 1e-12);
    REQUIRE(r.value <= r.interval_hi + 1e-12);
  }
}

TEST_CASE("scaling-ledger criterion agrees with the subcritical bound exactly") {
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + int(rng.uniform() * 8.0);
    Rat delta(1 + int(rng.uniform() * 60.0), 4 + int(rng.uniform() * 60.0));
    while (!(Rat(n) > 2 * delta)) delta /= 2;
    const Rat p(100 + 1 + int(rng.uniform() * 400.0), 100);
    const ExponentQuery q{n, 1, delta, 1, 2};
    const auto led = blowup_criterion(n, delta, p);
    REQUIRE(led.blowup_condition_met == (p < blowup_upper_bound(q)));
  }
}
