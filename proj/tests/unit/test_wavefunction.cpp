#include <doctest.h>

#include <cmath>

#include "oracles/frozen_values.hpp"
#include "tra/error.hpp"
#include "tra/spectra.hpp"
#include "tra/wavefunction.hpp"

using namespace tra;

namespace {

const PotentialSpec kTable = PotentialSpec::from_half_lambda2(Family::A, 10.0, -80.0);

}  // namespace

TEST_SUITE("wavefunction") {
  TEST_CASE("terminating free parameter") {
    CHECK(terminating_free_parameter(kTable) == doctest::Approx(oracle::kNuStar).epsilon(1e-14));
    const TraParams p = wavefunction_params(kTable, 30, 4);
    CHECK(p.nu == doctest::Approx(oracle::kNuStar).epsilon(1e-14));
  }

  TEST_CASE("values against the 45-digit series") {
    for (int k = 0; k < 5; ++k) {
      std::vector<double> r;
      std::vector<double> ref;
      for (const auto& s : oracle::kPsi) {
        if (s.k == k) {
          r.push_back(s.r);
          ref.push_back(s.psi);
        }
      }
      const WavefunctionSample w = bound_state_psi(kTable, 30, k, r);
      CHECK(w.coefficients.size() == static_cast<std::size_t>(k + 1));
      CHECK(w.coefficients[0] == doctest::Approx(1.0));
      double scale = 0.0;
      for (double v : ref) {
        scale = std::max(scale, std::abs(v));
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        CAPTURE(k);
        CAPTURE(r[i]);
        CHECK(std::abs(w.psi[i] - ref[i]) <= 1e-11 * scale);
      }
    }
  }

  TEST_CASE("nodes, residual and decay") {
    const std::vector<double> grid = default_radial_grid();
    CHECK(grid.size() == 2000);
    CHECK(grid.back() == doctest::Approx(6.0));
    for (int k = 0; k < 5; ++k) {
      CAPTURE(k);
      const WavefunctionSample w = bound_state_psi(kTable, 30, k, grid);
      CHECK(count_nodes(w.psi) == k);
      const ResidualReport good = schrodinger_residual(kTable, w, w.eps);
      const ResidualReport bad = schrodinger_residual(kTable, w, w.eps + 0.1);
      CHECK(good.residual <= 1e-6);
      CHECK(bad.residual > 1e3 * good.residual);
      CHECK(good.full_grid_residual >= good.residual);
      CHECK_FALSE(good.degenerate);
      CHECK(good.points_used > 1000);
    }
  }

  TEST_CASE("tails decay") {
    // the shallow levels reach their asymptote only well past r = 6
    const std::vector<double> grid = default_radial_grid(40.0, 4000);
    for (int k = 0; k < 5; ++k) {
      const WavefunctionSample w = bound_state_psi(kTable, 30, k, grid);
      double peak = 0.0;
      for (double v : w.psi) {
        peak = std::max(peak, std::abs(v));
      }
      CAPTURE(k);
      CHECK(std::abs(w.psi.back()) < 1e-3 * peak);
    }
  }

  TEST_CASE("normalization and orthogonality") {
    std::vector<double> grid;
    for (int i = 1; i <= 20000; ++i) {
      grid.push_back(12.0 * i / 20000.0);
    }
    WavefunctionOptions o;
    o.normalize = true;
    std::vector<WavefunctionSample> ws;
    for (int k = 0; k < 5; ++k) {
      ws.push_back(bound_state_psi(kTable, 30, k, grid, o));
      CHECK(ws.back().normalized);
    }
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double ip = trapezoid_inner(grid, ws[static_cast<std::size_t>(i)].psi, ws[static_cast<std::size_t>(j)].psi);
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) <= 1e-6);
      }
    }
  }

  TEST_CASE("ground state is the bare prefactor") {
    const std::vector<double> r = {0.1, 0.7, 2.0};
    const WavefunctionSample w = bound_state_psi(kTable, 30, 0, r);
    const double mu = std::sqrt(10.25);
    const double alpha = (mu + 0.5) / 2.0, beta = (oracle::kNuStar + 1.5) / 2.0;
    // phi_0 = c_0 (x-1)^alpha (x+1)^beta; compare ratios so c_0 drops out
    auto shape = [&](double x) { return std::pow(std::cosh(x) - 1.0, alpha) * std::pow(std::cosh(x) + 1.0, beta); };
    CHECK(w.psi[1] / w.psi[0] == doctest::Approx(shape(0.7) / shape(0.1)).epsilon(1e-12));
    CHECK(w.psi[2] / w.psi[0] == doctest::Approx(shape(2.0) / shape(0.1)).epsilon(1e-12));
  }

  TEST_CASE("origin behaviour") {
    const WavefunctionSample w = bound_state_psi(kTable, 30, 2, {1e-4, 2e-4});
    const double mu = std::sqrt(10.25);
    CHECK(std::log(w.psi[1] / w.psi[0]) / std::log(2.0) == doctest::Approx(mu + 0.5).epsilon(1e-6));
  }

  TEST_CASE("truncation at the terminating parameter") {
    const std::vector<double> grid = default_radial_grid(6.0, 400);
    for (int k = 0; k < 5; ++k) {
      const TruncationReport t = truncation_sensitivity(kTable, 30, k, k + 6, grid);
      CHECK(t.decoupled);
      CHECK(t.max_rel_change <= 1e-12);
      CHECK(t.row_residual <= 1e-10);
    }
    WavefunctionOptions off;
    off.free_param = oracle::kNuStar - 3.3;  // regime then allows N <= 6
    const TruncationReport t = truncation_sensitivity(kTable, 6, 1, 6, grid, off);
    CHECK_FALSE(t.decoupled);
    CHECK(t.max_rel_change > 1e-6);
  }

  TEST_CASE("errors and flags") {
    const std::vector<double> grid = default_radial_grid();
    CHECK_THROWS_AS((void)bound_state_psi(kTable, 30, 5, grid), ConstraintError);
    CHECK_THROWS_AS((void)bound_state_psi(kTable, 30, -1, grid), ConstraintError);
    CHECK_THROWS_AS((void)bound_state_psi(PotentialSpec{}, 30, 0, grid), ConstraintError);
    WavefunctionSample zero = bound_state_psi(kTable, 30, 0, grid);
    std::fill(zero.psi.begin(), zero.psi.end(), 0.0);
    CHECK(schrodinger_residual(kTable, zero, zero.eps).degenerate);
    const WavefunctionSample coarse = bound_state_psi(kTable, 30, 4, default_radial_grid(6.0, 60));
    CHECK(schrodinger_residual(kTable, coarse, coarse.eps).coarse_warning);
    CHECK(count_nodes({1.0, -1.0, 1.0, 1e-14, -1e-14}) == 2);
  }
}
