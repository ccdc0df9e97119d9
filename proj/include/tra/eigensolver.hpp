#pragma once

// Generalized symmetric tridiagonal eigenproblem T f = eps R f and the scan of the free
// basis parameter for a plateau of spectral stability.

#include <optional>
#include <string>
#include <vector>

#include "tra/potential.hpp"
#include "tra/tra_core.hpp"
#include "tra/tridiagonal.hpp"

namespace tra {

enum class EigMethod { CongruenceReduction, DeterminantBisection };

[[nodiscard]] std::string_view to_string(EigMethod m) noexcept;

struct GeneralizedEigResult {
  std::vector<double> eigenvalues;  // ascending
  /// eigenvectors[j] pairs with eigenvalues[j]; R-orthonormal (|f^T R f| = 1).
  std::optional<std::vector<std::vector<double>>> eigenvectors;
  EigMethod method = EigMethod::CongruenceReduction;
  /// Spectral condition number of R (max |lambda| / min |lambda|).
  double condition_diag = 1.0;
  /// R was negative definite and the pencil (-T, -R) was solved instead.
  bool pencil_negated = false;
  /// R is neither positive nor negative definite.
  bool r_indefinite = false;
  /// Largest |dense - bisection| eigenvalue difference when the dense values were polished
  /// by inertia-count bisection, relative to ||T|| / lambda_min(R). Zero otherwise.
  double sturm_discrepancy = 0.0;
};

struct EigOptions {
  bool want_vectors = false;
  /// R condition numbers above this switch to bisection.
  double condition_limit = 1.0e12;
  /// Force the bisection path (used to cross-check the two methods).
  bool force_bisection = false;
  /// Polish dense eigenvalues by bisection on the inertia count of T - sigma R, which has a
  /// componentwise backward error and so resolves the low-lying levels more sharply.
  bool refine = true;
  /// Grid density for the determinant scan when R is indefinite.
  int indefinite_scan_points = 20000;
};

[[nodiscard]] GeneralizedEigResult generalized_eig(const SymTridiagonal& T, const SymTridiagonal& R,
                                                   bool want_vectors = false);
[[nodiscard]] GeneralizedEigResult generalized_eig(const SymTridiagonal& T, const SymTridiagonal& R,
                                                   const EigOptions& options);

/// Number of negative pivots of the LDL^T factorization of T - sigma R. For positive
/// definite R this is the number of eigenvalues below sigma.
[[nodiscard]] int inertia_count(const SymTridiagonal& T, const SymTridiagonal& R, double sigma);

/// Sign of det(T - sigma R) from the same pivots (0 when a pivot vanishes).
[[nodiscard]] int determinant_sign(const SymTridiagonal& T, const SymTridiagonal& R, double sigma);

/// ||(T - eps R) f|| / ((||T|| + |eps| ||R||) ||f||) in the infinity norm.
[[nodiscard]] double backward_error(const SymTridiagonal& T, const SymTridiagonal& R, double eps,
                                    const std::vector<double>& f);

/// Number of negative pivots of T - sigma R in long double.
[[nodiscard]] int inertia_count_extended(const ExtendedPencil& P, long double sigma);

/// Polishes estimates of eigenvalues of the extended pencil by bisection on the long double
/// inertia count. Each estimate is matched to its index in the ascending order of `estimates`;
/// R must be positive definite (negative definite R is handled by negating the count).
/// Estimates the bracket search cannot confirm are returned unchanged.
[[nodiscard]] std::vector<double> refine_extended(const ExtendedPencil& P, const std::vector<double>& estimates);

/// Smallest eigenvalue of a symmetric tridiagonal matrix.
[[nodiscard]] double min_eigenvalue(const SymTridiagonal& M);

struct PlateauLevel {
  int level = 0;
  bool found = false;
  std::size_t begin = 0;  // inclusive grid indices of the longest stable run
  std::size_t end = 0;
  std::size_t points = 0;
  double free_lo = 0.0;
  double free_hi = 0.0;
  double free_mid = 0.0;
  /// Eigenvalue at the grid point in the middle of the run.
  double value = 0.0;
};

struct PlateauReport {
  std::vector<double> grid;
  /// Bound (negative) eigenvalues per grid point, deepest first.
  std::vector<std::vector<double>> bound_levels;
  std::vector<PlateauLevel> levels;
  std::vector<std::string> warnings;
};

struct PlateauOptions {
  double tolerance = 1.0e-9;  // relative spread allowed inside a plateau
  std::size_t min_points = 3;
  RootChoice root = RootChoice::Negative;
};

/// Solves the pencil at every value of the free basis parameter (nu for family A, mu for
/// family B) and reports, per bound level, the longest contiguous run of grid points over
/// which the eigenvalue varies by less than the tolerance.
[[nodiscard]] PlateauReport plateau_scan(const PotentialSpec& spec, int N,
                                         const std::vector<double>& grid,
                                         const PlateauOptions& options = {});

}  // namespace tra
