#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/frozen_values.hpp"
#include "oracles/oracles.hpp"
#include "tra/error.hpp"
#include "tra/jacobi.hpp"

using namespace tra;

TEST_SUITE("jacobi") {
  TEST_CASE("values match the frozen references") {
    for (const auto& s : oracle::kJacobi) {
      CAPTURE(s.n);
      CAPTURE(s.x);
      const double v = jacobi_recurrence(s.n, s.mu, s.nu, s.x).back();
      CHECK(std::abs(v - s.value) <= 1e-12 * std::max(1.0, std::abs(s.value)));
    }
  }

  TEST_CASE("recurrence against the 50-digit hypergeometric form") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mu_d(-0.9, 6.0), margin(0.1, 5.0), x_d(1.0, 8.0);
    for (int i = 0; i < 100; ++i) {
      const int N = 1 + i % 12;
      const double mu = mu_d(rng);
      const double nu = -2.0 * N - 1.0 - mu - margin(rng);
      const double x = x_d(rng);
      const std::vector<double> p = jacobi_eval_all(N, {mu, nu, N}, x);
      for (int n = 0; n <= N; ++n) {
        const double ref = static_cast<double>(oracle::jacobi(n, mu, nu, x));
        CHECK(std::abs(p[static_cast<std::size_t>(n)] - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
      }
    }
  }

  TEST_CASE("norms against quadrature") {
    for (const auto& s : oracle::kNorms) {
      CAPTURE(s.n);
      CHECK(jacobi_norm_sq(s.n, {s.mu, s.nu, 3}) == doctest::Approx(s.value).epsilon(1e-12));
    }
  }

  TEST_CASE("sine form of the norm") {
    const JacobiRegime g{0.7, -13.35, 5};
    for (int n = 0; n <= 5; ++n) {
      CHECK(jacobi_norm_sq_sine_form(n, g) == doctest::Approx(jacobi_norm_sq(n, g)).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)jacobi_norm_sq_sine_form(0, {0.5, -12.0, 3}), PoleError);
  }

  TEST_CASE("basis prefactor in half-angle form") {
    // (x-1)^alpha (x+1)^beta = 2^(alpha+beta) sinh^(2 alpha)(r/2) cosh^(2 beta)(r/2)
    const BasisSpec b{{0.5, -12.3, 4}, 0.5, -5.4};
    for (double r : {0.01, 0.4, 1.0, 3.0}) {
      const double x = std::cosh(r);
      const double half = std::pow(2.0, b.alpha + b.beta) * std::pow(std::sinh(0.5 * r), 2 * b.alpha) *
                          std::pow(std::cosh(0.5 * r), 2 * b.beta);
      const double direct = std::pow(x - 1.0, b.alpha) * std::pow(x + 1.0, b.beta);
      // x - 1 loses digits to cancellation at small r, the half-angle form does not
      CHECK(std::abs(half - direct) <= 1e-13 * direct / std::min(1.0, 100.0 * (x - 1.0)));
      const double phi0 = basis_eval(0, b, x);
      CHECK(phi0 == doctest::Approx(basis_normalization(0, b.regime) * direct).epsilon(1e-13));
    }
  }

  TEST_CASE("regime checks") {
    CHECK_THROWS_AS((JacobiRegime{-1.0, -5.0, 1}.validate()), ConstraintError);
    CHECK_THROWS_AS((JacobiRegime{0.5, -3.0, 1}.validate()), ConstraintError);  // mu + nu >= -2N - 1
    CHECK(JacobiRegime{0.5, -3.6, 1}.is_valid());
    CHECK_THROWS((void)jacobi_eval_all(2, {0.5, -8.0, 3}, 0.5));  // x < 1
    CHECK(jacobi_recurrence(0, 0.5, -3.0, 2.0) == std::vector<double>{1.0});
  }
}
