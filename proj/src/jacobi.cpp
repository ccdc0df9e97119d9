#include "tra/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tra/error.hpp"
#include "tra/specfun.hpp"

namespace tra {

namespace {

void require_index(int n, const JacobiRegime& regime) {
  if (n < 0 || n > regime.N) {
    throw DomainError("jacobi: index " + std::to_string(n) + " outside 0.." +
                      std::to_string(regime.N));
  }
}

void require_argument(double x) {
  if (!(x >= 1.0)) {
    throw DomainError("jacobi: argument must satisfy x >= 1");
  }
}

}  // namespace

bool JacobiRegime::is_valid() const noexcept {
  return N >= 0 && mu > -1.0 && mu + nu < -2.0 * N - 1.0;
}

void JacobiRegime::validate() const {
  if (N < 0) {
    throw ConstraintError("Jacobi regime: N must be non-negative");
  }
  if (!(mu > -1.0)) {
    throw ConstraintError("Jacobi regime violated: mu > -1 (mu = " + std::to_string(mu) + ")");
  }
  if (!(mu + nu < -2.0 * N - 1.0)) {
    throw ConstraintError("Jacobi regime violated: mu + nu < -2N - 1 (mu + nu = " +
                          std::to_string(mu + nu) + ", -2N - 1 = " +
                          std::to_string(-2 * N - 1) + ")");
  }
}

void BasisSpec::validate() const {
  regime.validate();
  if (!(alpha > 0.0)) {
    throw ConstraintError("basis: alpha must be positive (alpha = " + std::to_string(alpha) + ")");
  }
}

std::vector<double> jacobi_recurrence(int n_max, double mu, double nu, double x) {
  if (n_max < 0) {
    throw DomainError("jacobi_recurrence: negative degree");
  }
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1.0;
  if (n_max == 0) {
    return p;
  }
  p[1] = 0.5 * ((mu + nu + 2.0) * x + mu - nu);
  for (int n = 1; n < n_max; ++n) {
    const double s = 2.0 * n + mu + nu;
    const double diag = (nu * nu - mu * mu) / (s * (s + 2.0));
    const double lower = 2.0 * (n + mu) * (n + nu) / (s * (s + 1.0));
    const double upper = 2.0 * (n + 1.0) * (n + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0));
    const auto i = static_cast<std::size_t>(n);
    p[i + 1] = ((x - diag) * p[i] - lower * p[i - 1]) / upper;
  }
  return p;
}

std::vector<double> jacobi_eval_all(int n_max, const JacobiRegime& regime, double x) {
  regime.validate();
  require_index(n_max, regime);
  require_argument(x);
  return jacobi_recurrence(n_max, regime.mu, regime.nu, x);
}

double jacobi_eval(int n, const JacobiRegime& regime, double x) {
  return jacobi_eval_all(n, regime, x).back();
}

double jacobi_norm_sq(int n, const JacobiRegime& regime) {
  regime.validate();
  require_index(n, regime);
  const double mu = regime.mu;
  const double nu = regime.nu;
  // (-1)^{n+1} 2^{mu+nu+1} / (2n+mu+nu+1) * Gamma(n+mu+1)/Gamma(n+1) * (nu+1)_n
  //   * Gamma(-n-mu-nu) / Gamma(-nu)
  const double denom = 2.0 * n + mu + nu + 1.0;
  double log_abs = (mu + nu + 1.0) * std::numbers::ln2 - std::log(std::abs(denom));
  int sign = ((n + 1) % 2 == 0 ? 1 : -1) * (denom > 0.0 ? 1 : -1);

  const SignedLog g1 = ln_abs_gamma(n + mu + 1.0);
  const SignedLog g2 = ln_abs_gamma(n + 1.0);
  const SignedLog g3 = ln_abs_gamma(-n - mu - nu);
  const SignedLog g4 = ln_abs_gamma(-nu);
  log_abs += g1.log_abs - g2.log_abs + g3.log_abs - g4.log_abs;
  sign *= g1.sign * g2.sign * g3.sign * g4.sign;
  for (int j = 0; j < n; ++j) {
    const double f = nu + 1.0 + j;
    if (f == 0.0) {
      return 0.0;
    }
    log_abs += std::log(std::abs(f));
    if (f < 0.0) {
      sign = -sign;
    }
  }
  if (sign <= 0) {
    throw ConstraintError("jacobi_norm_sq: non-positive norm for n = " + std::to_string(n) +
                          " (regime violation)");
  }
  return std::exp(log_abs);
}

double jacobi_norm_sq_sine_form(int n, const JacobiRegime& regime) {
  regime.validate();
  require_index(n, regime);
  const double mu = regime.mu;
  const double nu = regime.nu;
  const double denom = 2.0 * n + mu + nu + 1.0;
  const double s_nu = std::sin(std::numbers::pi * nu);
  const double s_sum = std::sin(std::numbers::pi * (mu + nu + 1.0));
  if (s_nu == 0.0 || s_sum == 0.0) {
    throw PoleError("jacobi_norm_sq_sine_form: integer parameter makes the sine ratio singular");
  }
  const SignedLog g1 = ln_abs_gamma(n + mu + 1.0);
  const SignedLog g2 = ln_abs_gamma(n + nu + 1.0);
  const SignedLog g3 = ln_abs_gamma(n + 1.0);
  const SignedLog g4 = ln_abs_gamma(n + mu + nu + 1.0);
  const double log_abs = (mu + nu + 1.0) * std::numbers::ln2 - std::log(std::abs(denom)) +
                         g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs +
                         std::log(std::abs(s_nu / s_sum));
  const int sign = (denom > 0.0 ? 1 : -1) * g1.sign * g2.sign * g3.sign * g4.sign *
                   ((s_nu / s_sum) > 0.0 ? 1 : -1);
  if (sign <= 0) {
    throw ConstraintError("jacobi_norm_sq_sine_form: non-positive norm (regime violation)");
  }
  return std::exp(log_abs);
}

double basis_normalization(int n, const JacobiRegime& regime) {
  return 1.0 / std::sqrt(jacobi_norm_sq(n, regime));
}

std::vector<double> basis_eval_all(int n_max, const BasisSpec& spec, double x) {
  spec.validate();
  require_index(n_max, spec.regime);
  require_argument(x);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 1.0) {
    return out;
  }
  const std::vector<double> p = jacobi_recurrence(n_max, spec.regime.mu, spec.regime.nu, x);
  const double log_weight = spec.alpha * std::log(x - 1.0) + spec.beta * std::log1p(x);
  for (int n = 0; n <= n_max; ++n) {
    const double log_c = -0.5 * std::log(jacobi_norm_sq(n, spec.regime));
    const auto i = static_cast<std::size_t>(n);
    out[i] = std::exp(log_c + log_weight) * p[i];
  }
  return out;
}

double basis_eval(int n, const BasisSpec& spec, double x) {
  return basis_eval_all(n, spec, x).back();
}

}  // namespace tra
