#pragma once

// Bound-state wavefunctions from the finite expansion sum_{n<=k} f_n phi_n with
// f_n = W~_n at the exact level, and checks against the Schroedinger operator.

#include <optional>
#include <vector>

#include "tra/potential.hpp"
#include "tra/tra_core.hpp"
#include "tra/wilson.hpp"

namespace tra {

struct WavefunctionSample {
  std::vector<double> r;  // units 1/lambda
  std::vector<double> psi;
  int level = 0;
  bool normalized = false;
  double eps = 0.0;  // exact level used, dimensionless
  /// Free basis parameter actually used (nu for family A, mu for family B).
  double free_param = 0.0;
  /// Expansion coefficients f_0 .. f_k, f_0 = 1.
  std::vector<double> coefficients;
};

struct WavefunctionOptions {
  /// Free basis parameter. Unset selects the value at which the (k+1)-th coupling of the
  /// recursion vanishes at every exact level, so the k+1 term sum is an exact eigenfunction.
  std::optional<double> free_param;
  bool normalize = false;
  ZBranch branch = ZBranch::Auto;
};

/// Free parameter that terminates the series: nu = -1 - 2z (family A), mu = -1 + 2|z| for
/// the mapped family-B problem.
[[nodiscard]] double terminating_free_parameter(const PotentialSpec& spec);

/// Parameters of the basis used for level k. With the default free parameter the regime
/// is checked for the k+1 functions that enter; an explicit one is checked against N.
[[nodiscard]] TraParams wavefunction_params(const PotentialSpec& spec, int N, int k,
                                            const WavefunctionOptions& options = {});

/// psi_k on the given grid (r > 0, ascending). Throws ConstraintError for k outside 0..k_max.
[[nodiscard]] WavefunctionSample bound_state_psi(const PotentialSpec& spec, int N, int k,
                                                 const std::vector<double>& r_grid,
                                                 const WavefunctionOptions& options = {});

/// Uniform grid of `points` values on (0, r_end]: r_i = i r_end / points, i = 1..points.
[[nodiscard]] std::vector<double> default_radial_grid(double r_end = 6.0, int points = 2000);

struct ResidualReport {
  /// Over interior points with lambda r >= r_inner.
  double residual = 0.0;
  /// Same quantity over every interior point. Near r = 0 psi ~ r^(mu+1/2) and the stencil
  /// error there dominates; kept for reporting only.
  double full_grid_residual = 0.0;
  std::size_t points_used = 0;
  /// Richardson estimate |res(2h) - res(h)| / 15 of the finite-difference part, same window.
  double truncation_estimate = 0.0;
  bool degenerate = false;     // psi vanished identically
  bool coarse_warning = false; // truncation estimate above the threshold
};

/// max |(-psi''/2 + V psi - E psi)| / max |E psi| over interior points, psi'' from the
/// five-point stencil. The grid must be uniform with at least 9 points, and the window
/// lambda r >= r_inner must keep at least one stencil.
[[nodiscard]] ResidualReport schrodinger_residual(const PotentialSpec& spec,
                                                  const WavefunctionSample& sample, double eps,
                                                  double coarse_threshold = 1.0e-6, double r_inner = 0.2);

/// Sign changes of psi, ignoring samples below rel_floor * max|psi|.
[[nodiscard]] int count_nodes(const std::vector<double>& psi, double rel_floor = 1.0e-10);

struct TruncationReport {
  /// max |psi_ext - psi| / max |psi| after adding terms k+1 .. n_ext.
  double max_rel_change = 0.0;
  /// |off_k| relative to the row scale: zero means the sum decouples after n = k.
  double coupling = 0.0;
  /// Relative residual of recursion row k with W~_{k+1} dropped.
  double row_residual = 0.0;
  bool decoupled = false;
};

/// How much psi_k changes if the sum is extended to n_ext with coefficients evaluated at
/// the exact level. When the coupling off_k vanishes the extension terms are structurally
/// zero and only the closing-row residual is reported.
[[nodiscard]] TruncationReport truncation_sensitivity(const PotentialSpec& spec, int N, int k, int n_ext,
                                                      const std::vector<double>& r_grid,
                                                      const WavefunctionOptions& options = {});

/// Trapezoid integral of f g over the grid.
[[nodiscard]] double trapezoid_inner(const std::vector<double>& r, const std::vector<double>& f,
                                     const std::vector<double>& g);

}  // namespace tra
