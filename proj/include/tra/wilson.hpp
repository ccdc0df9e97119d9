#pragma once

// Nonconventional Wilson polynomials W~_n(z^2; a, b, c, d): the expansion coefficients
// f_n = f_0 W~_n of the family-A recursion.

#include <vector>

#include "tra/specfun.hpp"
#include "tra/tra_core.hpp"

namespace tra {

struct WilsonParams {
  Complex a;
  Complex b;
  Complex c;
  Complex d;
  double z_sq = 0.0;  // signed; z is imaginary when z_sq < 0
  Complex z;          // the chosen root of z_sq

  [[nodiscard]] Complex sum() const noexcept { return a + b + c + d; }
};

/// Which root of z^2 represents z. Family A uses +sqrt(z^2); the exchange-mapped family B
/// problem (mu < 0 after the map) uses -sqrt(z^2), the branch its bound states sit on.
enum class ZBranch { Auto, Positive, Negative };

/// Polynomial parameters for a family-A pencil (family-B input is exchange-mapped first):
///   a = (mu+1)/2 + i sqrt(eps), b = (mu+1)/2 - i sqrt(eps), c = d = (nu+1)/2,
///   z^2 = (mu^2 - 2A) / 4.
/// For eps < 0 the decaying branch i sqrt(eps) = -sqrt(|eps|) makes a and b real.
[[nodiscard]] WilsonParams params_from_physics(const TraParams& p, double eps,
                                               ZBranch branch = ZBranch::Auto);

/// Resolved sign (+1 or -1) of z for the given parameters and branch policy.
[[nodiscard]] int z_sign(const TraParams& p, ZBranch branch = ZBranch::Auto);

/// W~_0 .. W~_{n_max} at x = z^2 by forward three-term recursion from W~_0 = 1.
/// Throws PoleError with the offending n on a vanishing divisor.
[[nodiscard]] std::vector<Complex> wilson_tilde_recursion(int n_max, const WilsonParams& wp);

/// Coefficients of row n of the W~ recursion:
///   (z^2 + diagonal) W~_n + off_{n-1} W~_{n-1} + off_n W~_{n+1} = 0.
/// off may be (numerically) zero, where the recursion decouples; no error is raised for it.
struct WilsonRow {
  Complex diagonal;
  Complex off;
};
[[nodiscard]] WilsonRow wilson_row(int n, const WilsonParams& wp);

/// Conventional normalized Wilson polynomials W_0 .. W_{n_max} evaluated at argument x.
[[nodiscard]] std::vector<Complex> wilson_recursion(int n_max, const WilsonParams& wp, Complex x);

/// Outcome of the closed-form evaluation.
struct HypergeomValue {
  Complex value;
  /// The normalization radicand came out real and negative: the closed form is not
  /// usable for this (n, parameters); value is then taken from the recursion.
  bool radicand_negative = false;
};

/// W~_n = (-1)^n W_n(-z^2) from the square-root-normalized 4F3 closed form
///   4F3(-n, n+a+b+c+d-1, a+z, a-z; a+b, a+c, a+d | 1).
/// The prefactor is evaluated in log space. Its square-root branch is the one whose leading
/// coefficient of W_n has the phase of 1 / prod off_k, the convention of the recursion.
[[nodiscard]] HypergeomValue wilson_tilde_hypergeom(int n, const WilsonParams& wp);

/// k_max = floor((2 z_s - mu - 1) / 2) for the signed z of the (mapped) family-A problem, or
/// -1 when no level exists or z is not real.
[[nodiscard]] int max_bound_level(const TraParams& p);

/// Bound-state energy from z = k + b with b = (mu+1)/2 + sqrt(|eps|), the partner of a on
/// the decaying branch:  eps_k = -(z - k - (mu+1)/2)^2.
/// Throws ConstraintError when k > k_max or the potential supports no bound state.
[[nodiscard]] double bound_state_condition(const TraParams& p, int k);

}  // namespace tra
