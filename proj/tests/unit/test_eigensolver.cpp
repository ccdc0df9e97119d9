#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tra/eigensolver.hpp"
#include "tra/error.hpp"

using namespace tra;

namespace {

Eigen::MatrixXd dense(const SymTridiagonal& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i, i) = m.diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      d(i, i + 1) = d(i + 1, i) = m.offdiag[static_cast<std::size_t>(i)];
    }
  }
  return d;
}

// random symmetric T and diagonally dominant (so positive definite) R
std::pair<SymTridiagonal, SymTridiagonal> random_pencil(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-5.0, 5.0), pos(0.5, 2.0);
  SymTridiagonal T, R;
  for (std::size_t i = 0; i < n; ++i) {
    T.diag.push_back(u(rng));
    R.diag.push_back(3.0 + pos(rng));
    if (i + 1 < n) {
      T.offdiag.push_back(u(rng));
      R.offdiag.push_back(pos(rng));
    }
  }
  return {T, R};
}

const PotentialSpec kTable = PotentialSpec::from_half_lambda2(Family::A, 10.0, -80.0);

}  // namespace

TEST_SUITE("eigensolver") {
  TEST_CASE("agrees with a dense generalized solver") {
    std::mt19937_64 rng(42);
    for (std::size_t n : {1u, 2u, 7u, 30u}) {
      auto [T, R] = random_pencil(rng, n);
      const GeneralizedEigResult r = generalized_eig(T, R, true);
      Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(dense(T), dense(R));
      REQUIRE(r.eigenvalues.size() == n);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(r.eigenvalues[j] == doctest::Approx(ref.eigenvalues()(static_cast<Eigen::Index>(j))).epsilon(1e-12));
        const std::vector<double>& f = (*r.eigenvectors)[j];
        CHECK(backward_error(T, R, r.eigenvalues[j], f) <= 1e-13);
        // R-normalized
        const std::vector<double> rf = R.multiply(f);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          norm += f[i] * rf[i];
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
      }
      CHECK(r.method == EigMethod::CongruenceReduction);
    }
  }

  TEST_CASE("bisection path reproduces the dense path") {
    std::mt19937_64 rng(8);
    auto [T, R] = random_pencil(rng, 25);
    EigOptions o;
    o.force_bisection = true;
    o.want_vectors = true;
    const GeneralizedEigResult b = generalized_eig(T, R, o);
    const GeneralizedEigResult d = generalized_eig(T, R, false);
    CHECK(b.method == EigMethod::DeterminantBisection);
    for (std::size_t j = 0; j < d.eigenvalues.size(); ++j) {
      CHECK(b.eigenvalues[j] == doctest::Approx(d.eigenvalues[j]).epsilon(1e-11));
      CHECK(backward_error(T, R, b.eigenvalues[j], (*b.eigenvectors)[j]) <= 1e-11);
    }
  }

  TEST_CASE("inertia counts") {
    std::mt19937_64 rng(9);
    auto [T, R] = random_pencil(rng, 12);
    const GeneralizedEigResult r = generalized_eig(T, R, false);
    for (std::size_t j = 0; j < r.eigenvalues.size(); ++j) {
      CHECK(inertia_count(T, R, r.eigenvalues[j] - 1e-8) == static_cast<int>(j));
      CHECK(inertia_count(T, R, r.eigenvalues[j] + 1e-8) == static_cast<int>(j) + 1);
    }
    CHECK(determinant_sign(T, R, r.eigenvalues.front() - 1.0) == 1);
  }

  TEST_CASE("negative definite R is handled by negating the pencil") {
    std::mt19937_64 rng(10);
    auto [T, R] = random_pencil(rng, 9);
    const GeneralizedEigResult pos = generalized_eig(T, R, true);
    const GeneralizedEigResult neg = generalized_eig(T.negated(), R.negated(), true);
    CHECK(neg.pencil_negated);
    for (std::size_t j = 0; j < pos.eigenvalues.size(); ++j) {
      CHECK(neg.eigenvalues[j] == doctest::Approx(pos.eigenvalues[j]).epsilon(1e-12));
    }
  }

  TEST_CASE("indefinite R falls back to the determinant scan") {
    const SymTridiagonal T({1.0, -2.0, 3.0}, {0.3, 0.2});
    const SymTridiagonal R({1.0, -1.0, 2.0}, {0.1, 0.1});
    const GeneralizedEigResult r = generalized_eig(T, R, false);
    CHECK(r.r_indefinite);
    CHECK(r.method == EigMethod::DeterminantBisection);
    Eigen::MatrixXd Rinv_T = dense(R).inverse() * dense(T);
    Eigen::EigenSolver<Eigen::MatrixXd> ref(Rinv_T);
    for (double e : r.eigenvalues) {
      double best = 1e300;
      for (Eigen::Index j = 0; j < 3; ++j) {
        if (std::abs(ref.eigenvalues()(j).imag()) < 1e-12) {
          best = std::min(best, std::abs(ref.eigenvalues()(j).real() - e));
        }
      }
      CHECK(best <= 1e-8);
    }
  }

  TEST_CASE("long double polishing agrees with the double spectrum at moderate N") {
    const TraParams p = derive_params(kTable, 30);
    const Pencil m = build_matrices(p);
    const GeneralizedEigResult r = generalized_eig(m.T, m.R, false);
    std::vector<double> bound;
    for (double e : r.eigenvalues) {
      if (e < 0.0) {
        bound.push_back(e);
      }
    }
    REQUIRE(bound.size() == 5);
    const std::vector<double> fine = refine_extended(build_matrices_extended(p), bound);
    for (std::size_t j = 0; j < bound.size(); ++j) {
      CHECK(std::abs(fine[j] - bound[j]) <= 1e-11);
    }
    CHECK(inertia_count_extended(build_matrices_extended(p), 0.0L) == 5);
    CHECK(r.condition_diag < 1e4);
  }

  TEST_CASE("min eigenvalue") {
    const SymTridiagonal m({2.0, 2.0}, {1.0});
    CHECK(min_eigenvalue(m) == doctest::Approx(1.0));
  }

  TEST_CASE("plateau scan over the stability range") {
    const int N = 10;
    const double mu = std::sqrt(10.25);
    const NuRange range = plateau_range(mu, N);
    std::vector<double> grid;
    for (int i = 0; i <= 80; ++i) {
      grid.push_back(range.lo + (range.hi - range.lo) * i / 80.0);
    }
    PlateauOptions o;
    o.tolerance = 1e-6;
    const PlateauReport rep = plateau_scan(kTable, N, grid, o);
    REQUIRE(rep.levels.size() == 5);
    CHECK(rep.levels[0].found);
    // lower states are stable over a wider range
    const std::size_t w4 = rep.levels[4].found ? rep.levels[4].points : 0;
    CHECK(rep.levels[0].points > w4);
    CHECK(rep.levels[0].free_lo <= rep.levels[0].free_mid);
    CHECK(rep.bound_levels.size() == grid.size());

    const PlateauReport single = plateau_scan(kTable, N, {range.lo});
    for (const PlateauLevel& l : single.levels) {
      CHECK_FALSE(l.found);
    }
    CHECK_FALSE(single.warnings.empty());
  }
}
