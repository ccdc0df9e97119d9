#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles/frozen_values.hpp"
#include "tra/error.hpp"
#include "tra/scattering.hpp"
#include "tra/specfun.hpp"

using namespace tra;

namespace {

TraParams params(double u0, double us) {
  return derive_params(PotentialSpec::from_half_lambda2(Family::A, u0, us), 0);
}

}  // namespace

TEST_SUITE("scattering") {
  TEST_CASE("spot values against the frozen references") {
    for (const auto& s : oracle::kPhaseSpots) {
      CAPTURE(s.u0);
      CAPTURE(s.us);
      CAPTURE(s.eps);
      CAPTURE(s.z_sign);
      const TraParams p = params(s.u0, s.us);
      const double d = phase_shift(p, s.eps, s.z_sign > 0 ? ZBranch::Positive : ZBranch::Negative);
      CHECK(std::abs(std::remainder(d - s.delta, 2.0 * std::numbers::pi)) <= 1e-12);
      CHECK(std::abs(d - s.delta) <= 1e-12);  // same principal branch
    }
  }

  TEST_CASE("threshold limit for the free case") {
    const TraParams p = params(0.0, 0.0);
    CHECK(p.mu == doctest::Approx(0.5));
    const Complex arg = phase_shift_argument(p, 1e-20);
    CHECK(arg.real() == doctest::Approx(0.5));  // (mu+1)/2 - z with z = 1/4
    double previous = 1.0;
    for (double eps : {1e-2, 1e-4, 1e-8, 1e-12}) {
      const double d = std::abs(phase_shift(p, eps));
      CHECK(d < previous);
      previous = d;
    }
    CHECK(previous <= 1e-5);
  }

  TEST_CASE("conjugation antisymmetry and sqrt(eps) dependence") {
    const TraParams p = params(10.0, -80.0);
    for (double eps : {0.01, 0.3, 2.0, 17.0, 50.0}) {
      const double d = phase_shift(p, eps);
      const double dc = -2.0 * arg_gamma(phase_shift_argument(p, eps, ZBranch::Auto, true));
      CHECK(std::abs(std::remainder(d + dc, 4.0 * std::numbers::pi)) <= 1e-12);
      const double root = std::sqrt(eps);
      CHECK(phase_shift(p, root * root) == doctest::Approx(d).epsilon(1e-13));
    }
  }

  TEST_CASE("domain") {
    const TraParams p = params(10.0, -80.0);
    CHECK_THROWS_AS((void)phase_shift(p, 0.0), DomainError);
    CHECK_THROWS_AS((void)phase_shift(p, -1.0), DomainError);
    CHECK_THROWS_AS((void)phase_shift_curve(p, {1.0, 0.5}, false), DomainError);
  }

  TEST_CASE("curves and unwrapping") {
    const TraParams p = params(10.0, -80.0);
    std::vector<double> grid;
    for (int i = 0; i < 2000; ++i) {
      grid.push_back(0.01 + 50.0 * i / 1999.0);
    }
    const PhaseShiftCurve c = phase_shift_curve(p, grid, true);
    CHECK(c.unwrapped);
    REQUIRE(c.delta_unwrapped.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(std::isfinite(c.delta[i]));
      CHECK(std::abs(std::remainder(c.delta[i] - c.delta_unwrapped[i], 2.0 * std::numbers::pi)) <= 1e-12);
      if (i > 0) {
        CHECK(std::abs(c.delta_unwrapped[i] - c.delta_unwrapped[i - 1]) < std::numbers::pi);
      }
    }
    const PhaseShiftCurve plain = phase_shift_curve(p, grid, false);
    CHECK(plain.delta == c.delta);
    CHECK(plain.delta_unwrapped.empty());
    CHECK(phase_shift_curve(p, {}, true).delta.empty());
    const std::vector<double> u = unwrap_phase({3.0, -3.0, 3.1});
    CHECK(u[1] == doctest::Approx(-3.0 + 2.0 * std::numbers::pi));
  }
}
