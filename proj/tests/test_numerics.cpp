#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "flatwell/errors.hpp"
#include "flatwell/numerics.hpp"

using namespace flatwell;

namespace {

// Independent closed form through the C library's tgamma.
double closed_form_moment(double p, double c, double beta) {
  const double s = (p + 1.0) / beta;
  return std::pow(c, -s) / beta * std::tgamma(s);
}

}  // namespace

TEST_CASE("ln_gamma reference values") {
  CHECK(std::abs(ln_gamma(1.0)) < 1e-15);
  CHECK(std::abs(ln_gamma(2.0)) < 1e-15);
  CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  // mpmath: loggamma(0.5) = 0.572364942924700087...
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(ln_gamma(std::nan("")), DomainError);
}

TEST_CASE("ln_gamma recurrence and reflection") {
  for (double x : {0.1, 0.5, 1.5, 7.3, 41.0}) {
    CHECK(std::abs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)) < 1e-12);
  }
  // Gamma(x) Gamma(1-x) = pi / sin(pi x)
  for (double x : {0.1, 0.25, 0.5, 0.7, 0.93}) {
    const double lhs = ln_gamma(x) + ln_gamma(1.0 - x);
    const double rhs = std::log(std::numbers::pi / std::sin(std::numbers::pi * x));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("ln_gamma accuracy over [1e-3, 1e3]") {
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (int i = 0; i <= 3000; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 3000.0);
    const double truth = std::lgamma(x);
    const double err = std::abs(ln_gamma(x) - truth);
    // Relative error is meaningless next to the zeros at x = 1 and x = 2.
    if (std::abs(truth) > 0.1) {
      worst_rel = std::max(worst_rel, err / std::abs(truth));
    } else {
      worst_abs = std::max(worst_abs, err);
    }
  }
  CHECK(worst_rel <= 1e-13);
  CHECK(worst_abs <= 1e-14);
}

TEST_CASE("decaying moment quadrature examples") {
  const QuadratureResult a = integrate_decaying_moment(1.0, 1.0, 2.0);
  CHECK(a.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.error_bound >= 0.0);
  CHECK(a.evaluations > 0);

  CHECK(integrate_decaying_moment(2.0, 3.0, 3.0).value == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(integrate_decaying_moment(0.0, 1.0, 2.0).value ==
        doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-12));

  // steep kernel for large beta and small p
  CHECK(integrate_decaying_moment(0.0, 0.7, 200.0).value ==
        doctest::Approx(closed_form_moment(0.0, 0.7, 200.0)).epsilon(1e-10));
}

TEST_CASE("decaying moment quadrature errors") {
  CHECK_THROWS_AS(integrate_decaying_moment(-1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(integrate_decaying_moment(1.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(integrate_decaying_moment(1.0, 1.0, 1.5), DomainError);
  QuadratureOptions starved;
  starved.rel_tol = 1e-15;
  starved.max_evaluations = 40;
  CHECK_THROWS_AS(integrate_decaying_moment(0.5, 1.0, 2.5, starved), ConvergenceError);
}

TEST_CASE("quadrature agrees with the Gamma closed form and bounds its error") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> p_dist(0.0, 10.0), c_dist(0.1, 50.0), beta_dist(2.0, 20.0);
  int honest = 0;
  const int cases = 200;
  double worst = 0.0;
  for (int i = 0; i < cases; ++i) {
    const double p = p_dist(rng), c = c_dist(rng), beta = beta_dist(rng);
    const QuadratureResult q = integrate_decaying_moment(p, c, beta);
    const double truth = closed_form_moment(p, c, beta);
    worst = std::max(worst, std::abs(q.value / truth - 1.0));
    if (std::abs(q.value - truth) <= q.error_bound) ++honest;
    CHECK(std::isfinite(q.error_bound));
  }
  CHECK(worst <= 1e-8);
  CHECK(honest >= 198);
}

TEST_CASE("golden-section minimization") {
  SUBCASE("quadratic") {
    const ScalarMinimum m = minimize_scalar([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0, 1e-8);
    CHECK(m.x == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(m.value < 1e-14);
  }
  SUBCASE("harmonic Rayleigh quotient in alpha") {
    const auto f = [](double x) { return x + 1.0 / (4.0 * x); };
    const ScalarMinimum m = minimize_scalar(f, 0.1, 3.0, 1e-10);
    // x is resolved only to about sqrt(machine epsilon) at a smooth minimum
    CHECK(m.x == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.value == f(m.x));
  }
  SUBCASE("cosh") {
    const ScalarMinimum m = minimize_scalar([](double x) { return std::cosh(x - 1.0); }, -2.0, 4.0, 1e-9);
    CHECK(m.x == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("invalid bracket") {
    const auto f = [](double x) { return x * x; };
    CHECK_THROWS_AS(minimize_scalar(f, 1.0, 1.0, 1e-6), DomainError);
    CHECK_THROWS_AS(minimize_scalar(f, 2.0, 1.0, 1e-6), DomainError);
    CHECK_THROWS_AS(minimize_scalar(f, 0.0, 1.0, 0.0), DomainError);
  }
  SUBCASE("monotone function hits the endpoint") {
    const ScalarMinimum m = minimize_scalar([](double x) { return std::exp(x); }, -1.0, 2.0, 1e-8);
    CHECK(m.value <= std::exp(-1.0));
  }
}

TEST_CASE("golden-section result against a dense grid") {
  struct Case {
    double (*f)(double);
    double lo, hi;
  };
  const Case cases[] = {
      {[](double x) { return (x - 0.3) * (x - 0.3) * (x - 0.3) * (x - 0.3) + 0.1 * x; }, -2.0, 2.0},
      {[](double x) { return x + 1.0 / (4.0 * x); }, 0.05, 5.0},
      {[](double x) { return std::abs(x - 1.234) + 2.0; }, 0.0, 3.0},
      {[](double x) { return -std::sin(x); }, 0.0, 3.0},
  };
  const double tol = 1e-9;
  for (const Case& c : cases) {
    const ScalarMinimum m = minimize_scalar(c.f, c.lo, c.hi, tol);
    double grid_min = c.f(c.lo);
    const int points = 100000;
    for (int i = 0; i <= points; ++i) grid_min = std::min(grid_min, c.f(c.lo + (c.hi - c.lo) * i / points));
    CHECK(m.value <= grid_min + tol * (1.0 + std::abs(m.value)));
    CHECK(m.value <= std::min(c.f(c.lo), c.f(c.hi)));
  }
}
