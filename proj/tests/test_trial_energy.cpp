#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "flatwell/errors.hpp"
#include "flatwell/potential.hpp"
#include "flatwell/trial_energy.hpp"

using namespace flatwell;

namespace {

constexpr Backend kBackends[] = {Backend::gamma, Backend::quadrature};

}  // namespace

TEST_CASE("matched exponent") {
  CHECK(beta_for(2.0) == 2.0);
  CHECK(beta_for(4.0) == 3.0);
  CHECK(beta_for(3.0) == 2.5);
  CHECK(beta_for(8.0) == 5.0);
  CHECK_THROWS_AS(beta_for(1.0), DomainError);
}

TEST_CASE("matched alpha") {
  CHECK(matched_alpha(ReducedProblem::power(1.0, 2.0)) == 0.5);
  CHECK(matched_alpha(ReducedProblem::power(4.0, 2.0)) == 1.0);
  CHECK(matched_alpha(ReducedProblem::power(1.0, 4.0)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(matched_alpha(ReducedProblem::square_well()), DomainError);
  for (double mu : {0.3, 1.0, 2.5, 17.0}) {
    for (double n : {2.0, 3.0, 6.0, 11.5}) {
      const double alpha = matched_alpha(ReducedProblem::power(mu, n));
      const double beta = beta_for(n);
      CHECK(alpha * alpha * beta * beta == doctest::Approx(mu).epsilon(1e-14));
    }
  }
}

TEST_CASE("normalization constant") {
  for (Backend b : kBackends) {
    CHECK(normalization_constant(0.5, 2.0, 1.0, b) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-12));
    // mpmath: [2 (1/3) (2/3)^(-1/3) Gamma(1/3)]^(-1/2)
    CHECK(normalization_constant(1.0 / 3.0, 3.0, 1.0, b) == doctest::Approx(0.6993840307296824).epsilon(1e-11));
  }
  for (double alpha : {0.2, 1.0, 3.0}) {
    for (double beta : {2.0, 3.7, 9.0}) {
      CHECK(normalization_constant(alpha, beta, 2.0) ==
            doctest::Approx(normalization_constant(alpha, beta, 1.0) / std::sqrt(2.0)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(normalization_constant(0.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(normalization_constant(1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(normalization_constant(1.0, 2.0, 0.0), DomainError);
}

TEST_CASE("normalized trial function integrates to one") {
  // Independent check with a plain trapezoid sum of A^2 psi^2 over a wide grid.
  for (double beta : {2.0, 2.5, 4.0}) {
    const double alpha = 0.4;
    const double a = 1.7;
    const double amplitude = normalization_constant(alpha, beta, a);
    const int n = 200000;
    const double zmax = 12.0;
    double sum = 0.0;
    for (int i = -n; i <= n; ++i) {
      const double z = zmax * i / n;
      sum += std::exp(-2.0 * alpha * std::pow(std::abs(z), beta));
    }
    const double integral = amplitude * amplitude * a * sum * (zmax / n);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("generalized Gaussian moments") {
  for (Backend b : kBackends) {
    CHECK(moment(0.0, 0.7, 3.3, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moment(2.0, 0.5, 2.0, b) == doctest::Approx(0.5).epsilon(1e-12));
    // mpmath: (2/3)^(-1/3) Gamma(2/3) / Gamma(1/3)
    CHECK(moment(1.0, 1.0 / 3.0, 3.0, b) == doctest::Approx(0.5786165196684785).epsilon(1e-11));
  }
  CHECK_THROWS_AS(moment(-1.0, 1.0, 2.0, Backend::gamma), DomainError);
}

TEST_CASE("integration-by-parts identity of the kinetic term") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha_dist(0.05, 5.0), beta_dist(2.0, 15.0);
  for (int i = 0; i < 100; ++i) {
    const double alpha = alpha_dist(rng), beta = beta_dist(rng);
    for (Backend b : kBackends) {
      const double lhs = (beta - 1.0) * moment(beta - 2.0, alpha, beta, b);
      const double rhs = 2.0 * alpha * beta * moment(2.0 * beta - 2.0, alpha, beta, b);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("matched energy estimate") {
  SUBCASE("harmonic") {
    for (Backend b : kBackends) {
      const EnergyEstimate e = energy_matched(ReducedProblem::power(1.0, 2.0), b);
      CHECK(e.reduced_energy == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(e.coefficient_C == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
      CHECK(e.beta == 2.0);
    }
  }
  SUBCASE("quartic") {
    for (Backend b : kBackends) {
      const EnergyEstimate e = energy_matched(ReducedProblem::power(1.0, 4.0), b);
      CHECK(e.coefficient_C == doctest::Approx(0.7290111).epsilon(1e-7));
      // mpmath Rayleigh quotient at alpha = 1/3, beta = 3: 1.1572330393369570
      CHECK(e.reduced_energy == doctest::Approx(1.157233039336957).epsilon(1e-11));
      CHECK(e.reduced_energy == doctest::Approx(e.coefficient_C * std::cbrt(4.0)).epsilon(1e-14));
      CHECK(e.method == (b == Backend::gamma ? Method::gamma : Method::quadrature));
      CHECK(e.error_bound >= 0.0);
    }
    const double e1 = energy_matched(ReducedProblem::power(1.0, 4.0), Backend::gamma).reduced_energy;
    const double e8 = energy_matched(ReducedProblem::power(8.0, 4.0), Backend::gamma).reduced_energy;
    CHECK(e8 == doctest::Approx(2.0 * e1).epsilon(1e-14));
  }
  SUBCASE("physical energy") {
    const ReducedProblem rp = reduce(make_power_potential(2.0, 1.5, 6.0), PhysicalConstants(1.2, 0.8));
    const EnergyEstimate e = energy_matched(rp, Backend::gamma);
    CHECK(e.physical_energy == doctest::Approx(e.reduced_energy * rp.energy_scale).epsilon(1e-15));
    // E = C (hbar^2 / m a^2)^(1 - 1/beta) mu^(1/beta)
    const double hm = 1.2 * 1.2 / (0.8 * 1.5 * 1.5);
    CHECK(e.physical_energy ==
          doctest::Approx(e.coefficient_C * std::pow(hm, e.kinetic_exponent) * std::pow(2.0, e.potential_exponent))
              .epsilon(1e-13));
  }
  CHECK_THROWS_AS(energy_matched(ReducedProblem::square_well(), Backend::gamma), DomainError);
}

TEST_CASE("coefficient table values") {
  CHECK(coefficient(2.0, Backend::gamma) == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(std::abs(coefficient(3.0, Backend::gamma) - 0.7290111) < 1e-7);
  CHECK(std::abs(coefficient(4.0, Backend::gamma) - 0.8526415) < 1e-7);
  CHECK(std::abs(coefficient(5.0, Backend::gamma) - 1.009593) < 1e-6);
  // mpmath closed form
  CHECK(coefficient(2.5, Backend::gamma) == doctest::Approx(0.6947255179707759).epsilon(1e-13));
}

TEST_CASE("coefficient backends agree") {
  for (double beta : {2.0, 2.5, 3.0, 4.0, 5.0, 8.0, 12.0, 20.0}) {
    const double g = coefficient(beta, Backend::gamma);
    const double q = coefficient(beta, Backend::quadrature);
    CHECK(std::abs(g / q - 1.0) <= 1e-8);
  }
}

TEST_CASE("coefficient does not depend on mu") {
  for (double n : {2.0, 3.0, 4.0, 6.0, 9.0}) {
    const double c = coefficient(beta_for(n), Backend::gamma);
    for (double mu : {0.5, 1.0, 7.0}) {
      CHECK(energy_matched(ReducedProblem::power(mu, n), Backend::gamma).coefficient_C ==
            doctest::Approx(c).epsilon(1e-13));
    }
  }
}

TEST_CASE("scaling laws and exponent partition") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> n_dist(2.0, 30.0), mu_dist(0.01, 100.0), s_dist(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double n = n_dist(rng), mu = mu_dist(rng), s = s_dist(rng);
    const double beta = beta_for(n);
    const EnergyEstimate base = energy_matched(ReducedProblem::power(mu, n), Backend::gamma);
    const EnergyEstimate scaled = energy_matched(ReducedProblem::power(s * mu, n), Backend::gamma);
    CHECK(scaled.reduced_energy == doctest::Approx(std::pow(s, 1.0 / beta) * base.reduced_energy).epsilon(1e-12));
    CHECK(base.kinetic_exponent + base.potential_exponent == 1.0);

    const PhysicalConstants consts(1.0, 1.0);
    const double e_a = energy_matched(reduce(make_power_potential(mu, 1.0, n), consts), Backend::gamma).physical_energy;
    const double e_sa = energy_matched(reduce(make_power_potential(mu, s, n), consts), Backend::gamma).physical_energy;
    CHECK(e_sa == doctest::Approx(std::pow(1.0 / (s * s), 1.0 - 1.0 / beta) * e_a).epsilon(1e-12));
  }
}

TEST_CASE("harmonic estimate equals hbar omega / 2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.2, 5.0);
  for (int i = 0; i < 50; ++i) {
    const PhysicalConstants c(d(rng), d(rng));
    const Potential p = make_power_potential(d(rng), d(rng), 2.0);
    const double exact = 0.5 * c.hbar() * harmonic_frequency(p, c);
    CHECK(energy_matched(reduce(p, c), Backend::gamma).physical_energy == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("coefficient grows through the square-well value") {
  const double square_well = std::numbers::pi * std::numbers::pi / 8.0;
  for (double beta = 3.0; beta < 7.0; beta += 1.0) {
    CHECK(coefficient(beta, Backend::gamma) < coefficient(beta + 1.0, Backend::gamma));
  }
  CHECK(coefficient(6.0, Backend::gamma) < square_well);
  CHECK(coefficient(7.0, Backend::gamma) > square_well);
  // dips below C(2) near beta = 2.5
  CHECK(coefficient(2.5, Backend::gamma) < coefficient(2.0, Backend::gamma));
}

TEST_CASE("Rayleigh quotient") {
  const ReducedProblem harmonic = ReducedProblem::power(1.0, 2.0);
  for (Backend b : kBackends) {
    CHECK(rayleigh_quotient(harmonic, 0.5, 2.0, b) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rayleigh_quotient(harmonic, 1.0, 2.0, b) == doctest::Approx(1.25).epsilon(1e-12));
    for (double alpha : {0.1, 0.3, 2.0}) {
      CHECK(rayleigh_quotient(harmonic, alpha, 2.0, b) == doctest::Approx(alpha + 0.25 / alpha).epsilon(1e-12));
    }
  }
  for (double n : {3.0, 4.0, 6.0, 10.0}) {
    for (double mu : {0.5, 1.0, 3.0}) {
      const ReducedProblem rp = ReducedProblem::power(mu, n);
      for (Backend b : kBackends) {
        CHECK(rayleigh_quotient(rp, matched_alpha(rp), beta_for(n), b) ==
              doctest::Approx(energy_matched(rp, b).reduced_energy).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(rayleigh_quotient(harmonic, -1.0, 2.0, Backend::gamma), DomainError);
  CHECK_THROWS_AS(rayleigh_quotient(ReducedProblem::square_well(), 1.0, 2.0, Backend::gamma), DomainError);
}

TEST_CASE("alpha optimization") {
  SUBCASE("harmonic: matched alpha is optimal") {
    const OptimizedAlpha o = optimize_alpha(ReducedProblem::power(1.0, 2.0), 2.0);
    CHECK(o.alpha_star == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(o.reduced_energy == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("closed-form minimum") {
    // RQ(alpha) = K alpha^(2/beta) + P alpha^(-N/beta); minimum evaluated with mpmath.
    const struct {
      double n, alpha, energy;
    } cases[] = {{3.0, 0.4898979485566356, 1.0320161799553417},
                 {4.0, 0.4714045207910317, 1.0935166994208405},
                 {6.0, 0.4330127018922193, 1.2581372697078015},
                 {8.0, 0.4, 1.4496467400397559},
                 {12.0, 0.3499271061118826, 1.8681138852997771}};
    for (const auto& c : cases) {
      const OptimizedAlpha o = optimize_alpha(ReducedProblem::power(1.0, c.n), beta_for(c.n));
      CHECK(o.reduced_energy == doctest::Approx(c.energy).epsilon(1e-12));
      CHECK(o.alpha_star == doctest::Approx(c.alpha).epsilon(1e-6));
    }
  }
  SUBCASE("never above the matched value and at the dense-grid minimum") {
    const ReducedProblem rp = ReducedProblem::power(1.0, 4.0);
    const OptimizedAlpha o = optimize_alpha(rp, 3.0);
    const double matched = rayleigh_quotient(rp, matched_alpha(rp), 3.0, Backend::gamma);
    CHECK(o.reduced_energy <= matched + 1e-12);
    CHECK(o.reduced_energy <= 1.157233039336957);
    const double lo = matched_alpha(rp) / 10.0, hi = matched_alpha(rp) * 10.0;
    double grid_min = matched;
    const int points = 100000;
    for (int i = 0; i <= points; ++i) {
      grid_min = std::min(grid_min, rayleigh_quotient(rp, lo + (hi - lo) * i / points, 3.0, Backend::gamma));
    }
    CHECK(o.reduced_energy <= grid_min + 1e-12);
  }
  SUBCASE("through estimate_energy") {
    const ReducedProblem rp = reduce(make_power_potential(1.0, 1.0, 4.0), PhysicalConstants(1.0, 1.0));
    const EnergyEstimate e = estimate_energy(rp, Method::optimized_alpha);
    CHECK(e.method == Method::optimized_alpha);
    CHECK(e.coefficient_C < estimate_energy(rp, Method::gamma).coefficient_C);
    CHECK(e.coefficient_C > 0.667986259155777);
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("gamma") == Method::gamma);
  CHECK(parse_method("quadrature") == Method::quadrature);
  CHECK(parse_method("optimized") == Method::optimized_alpha);
  CHECK(to_string(Method::optimized_alpha) == "optimized-alpha");
  CHECK_THROWS_AS(parse_method("simpson"), DomainError);
}

TEST_CASE("trial wavefunction samples") {
  const std::vector<double> grid = {-1.5, -0.5, 0.0, 0.5, 1.5};
  for (double beta : {2.0, 3.0, 7.5}) {
    const WavefunctionSamples s = sample_trial(0.4, beta, 1.0, grid);
    CHECK(s.source == WavefunctionSource::trial);
    CHECK(s.values[2] == doctest::Approx(normalization_constant(0.4, beta, 1.0)).epsilon(1e-15));
    CHECK(std::abs(s.values[0] - s.values[4]) <= 1e-12);
    CHECK(std::abs(s.values[1] - s.values[3]) <= 1e-12);
  }
  // Fixed alpha: larger beta flattens the core and sharpens the shoulder.
  const WavefunctionSamples narrow = sample_trial(0.5, 2.0, 1.0, grid);
  const WavefunctionSamples flat = sample_trial(0.5, 4.0, 1.0, grid);
  CHECK(flat.values[3] > narrow.values[3]);
  CHECK(flat.values[4] < narrow.values[4]);
}
