#pragma once

// Jacobi polynomials P_n^{(mu,nu)}(x) on x >= 1 in the regime mu > -1,
// mu + nu < -2N - 1, where only the first N+1 members are orthogonal, and the
// square-integrable basis functions built from them.

#include <vector>

namespace tra {

struct JacobiRegime {
  double mu = 0.0;
  double nu = 0.0;
  int N = 0;

  /// Throws ConstraintError naming the violated inequality.
  void validate() const;
  [[nodiscard]] bool is_valid() const noexcept;
};

/// Basis functions phi_n(x) = c_n (x-1)^alpha (x+1)^beta P_n^{(mu,nu)}(x).
struct BasisSpec {
  JacobiRegime regime;
  double alpha = 0.0;
  double beta = 0.0;

  /// Regime constraints plus alpha > 0.
  void validate() const;
};

/// Forward three-term recursion without any regime or domain checks. Also used at
/// reflected arguments and swapped parameters, where the regime does not hold.
[[nodiscard]] std::vector<double> jacobi_recurrence(int n_max, double mu, double nu, double x);

/// P_n^{(mu,nu)}(x) for 0 <= n <= N and x >= 1.
[[nodiscard]] double jacobi_eval(int n, const JacobiRegime& regime, double x);

/// P_0 .. P_{n_max}; n_max <= N.
[[nodiscard]] std::vector<double> jacobi_eval_all(int n_max, const JacobiRegime& regime, double x);

/// Squared norm of P_n under the weight (x-1)^mu (x+1)^nu on [1, inf). Evaluated from the
/// Gamma-ratio form, which has no removable singularities inside the regime.
[[nodiscard]] double jacobi_norm_sq(int n, const JacobiRegime& regime);

/// The same norm written with the ratio sin(pi nu) / sin(pi (mu+nu+1)).
[[nodiscard]] double jacobi_norm_sq_sine_form(int n, const JacobiRegime& regime);

/// Normalization constant c_n = 1 / sqrt(jacobi_norm_sq).
[[nodiscard]] double basis_normalization(int n, const JacobiRegime& regime);

/// phi_n(x). Exact zero at x = 1.
[[nodiscard]] double basis_eval(int n, const BasisSpec& spec, double x);

/// phi_0 .. phi_{n_max} at one point.
[[nodiscard]] std::vector<double> basis_eval_all(int n_max, const BasisSpec& spec, double x);

}  // namespace tra
