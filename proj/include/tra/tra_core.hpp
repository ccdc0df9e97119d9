#pragma once

// Physics-to-basis parameter derivation and the symmetric three-term recursion of
// the expansion coefficients, cast as the matrix pencil T f = eps R f.
//
// All quantities here are dimensionless: eps = 2E/l^2, A = +-2Vs/l^2.

#include <optional>
#include <vector>

#include "tra/jacobi.hpp"
#include "tra/potential.hpp"
#include "tra/tridiagonal.hpp"

namespace tra {

/// Sign of the square root nu = +-sqrt(1/4 + 2 V0 / l^2) for family B. Only the negative
/// root is compatible with mu > -1 and mu + nu < -2N - 1.
enum class RootChoice { Negative, Positive };

struct TraParams {
  Family family = Family::A;
  double mu = 0.0;
  double nu = 0.0;
  double A = 0.0;
  int N = 0;
  BasisSpec basis;

  [[nodiscard]] JacobiRegime regime() const noexcept { return {mu, nu, N}; }
};

/// Default for the free basis parameter (nu for family A, mu for family B): the middle of
/// the stability plateau, -2N - mu - 7/2 for family A. For family B the same offset below
/// the upper bound is used, clipped to the middle of (-1, upper) when that leaves the range.
[[nodiscard]] double default_free_parameter(const PotentialSpec& spec, int N,
                                            RootChoice root = RootChoice::Negative);

/// [nu_lo, nu_hi] = [-2N - mu - 11/2, -2N - mu - 3/2] for family A.
struct NuRange {
  double lo = 0.0;
  double hi = 0.0;
};
[[nodiscard]] NuRange plateau_range(double mu, int N);

/// Throws ConstraintError naming the violated inequality.
[[nodiscard]] TraParams derive_params(const PotentialSpec& spec, int N,
                                      std::optional<double> free_param = std::nullopt,
                                      RootChoice root = RootChoice::Negative);

struct RecursionCoeffs {
  double C = 0.0;
  double D = 0.0;  // zero for n == N, where it does not enter the matrices
};

/// C_n = (nu^2 - mu^2) / ((2n+mu+nu)(2n+mu+nu+2)) and D_n. Uses only (mu, nu), so it is
/// valid for mapped parameter sets as well. Throws ConstraintError on a negative radicand.
[[nodiscard]] RecursionCoeffs recursion_coeffs(double mu, double nu, int N, int n);
[[nodiscard]] RecursionCoeffs recursion_coeffs(const TraParams& p, int n);

struct Pencil {
  SymTridiagonal T;
  SymTridiagonal R;
};

/// Family-A recursion: T from eps = 0, R from the eps coefficient. For family-B input the
/// parameters are first exchanged with map_b_to_a.
[[nodiscard]] Pencil build_matrices(const TraParams& p);

/// The same pencil assembled in long double, for eigenvalue polishing. The entries carry
/// large cancelling terms of size ~N^2, so double rounding limits levels at large N.
struct ExtendedPencil {
  std::vector<long double> t_diag, t_off, r_diag, r_off;
};
[[nodiscard]] ExtendedPencil build_matrices_extended(const TraParams& p);

/// Direct family-B recursion, kept to cross-check the exchange map.
[[nodiscard]] Pencil build_matrices_direct_b(const TraParams& p);

/// mu <-> nu, A -> -A, alpha <-> beta, family flipped. Involutive.
[[nodiscard]] TraParams map_b_to_a(const TraParams& p);

/// f_n -> (-1)^n f_n
[[nodiscard]] std::vector<double> alternate_signs(std::vector<double> f);

/// Both sides of an algebraic identity evaluated in floating point.
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  [[nodiscard]] double residual() const noexcept;
  /// residual / max(|lhs|, 1)
  [[nodiscard]] double scaled_residual() const noexcept;
};

/// Identity used to match the expansion-coefficient recursion to the Wilson recursion.
/// Throws PoleError when 2n + mu + nu is 0, -1 or -2.
[[nodiscard]] IdentitySides identity_recursion_sum(int n, double mu, double nu, double chi);

/// 2(nu-mu) n (n+mu+nu+1) / (s (s+2)) = -2n(n+mu)/s + n (C_n + 1), s = 2n+mu+nu.
[[nodiscard]] IdentitySides identity_diagonal_split(int n, double mu, double nu);

/// F_n = eps + n(n+mu+nu+1) + (mu+nu+1+q)^2 / 4 as it enters the unsymmetrized recursion.
[[nodiscard]] double f_coefficient(int n, double mu, double nu, double eps, double q);

/// Row-major dense pencil; T and R are (size x size).
struct DensePencil {
  std::size_t size = 0;
  std::vector<double> T;
  std::vector<double> R;
  [[nodiscard]] double t(std::size_t i, std::size_t j) const { return T[i * size + j]; }
  [[nodiscard]] double r(std::size_t i, std::size_t j) const { return R[i * size + j]; }
};

/// The family-A pencil assembled from the unsymmetrized recursion with free exponent
/// q = 2 beta - nu - 1/2. It is symmetric only for q = 1, where it equals build_matrices.
[[nodiscard]] DensePencil build_matrices_unsymmetrized(const TraParams& p, double q);

}  // namespace tra
