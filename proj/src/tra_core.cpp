#include "tra/tra_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tra/error.hpp"

namespace tra {

namespace {

double required_root(double u0) { return std::sqrt(0.25 + u0); }

double checked_pair_denominator(double s) {
  // s (s + 2) with s = 2n + mu + nu
  if (s == 0.0 || s + 2.0 == 0.0) {
    throw PoleError("recursion coefficient: 2n + mu + nu hits 0 or -2");
  }
  return s * (s + 2.0);
}

}  // namespace

NuRange plateau_range(double mu, int N) { return {-2.0 * N - mu - 5.5, -2.0 * N - mu - 1.5}; }

double default_free_parameter(const PotentialSpec& spec, int N, RootChoice root) {
  spec.validate();
  if (N < 0) {
    throw ConstraintError("basis size N must be non-negative");
  }
  const double root_value = required_root(spec.u0());
  if (spec.family == Family::A) {
    return -2.0 * N - root_value - 3.5;
  }
  const double nu = root == RootChoice::Negative ? -root_value : root_value;
  const double upper = -2.0 * N - 1.0 - nu;
  if (!(upper > -1.0)) {
    throw ConstraintError("family B: no admissible mu for N = " + std::to_string(N) +
                          " (needs -2N - 1 - nu > -1, i.e. 2N < |nu| with the negative root)");
  }
  const double candidate = upper - 2.5;
  return candidate > -1.0 ? candidate : 0.5 * (upper - 1.0);
}

TraParams derive_params(const PotentialSpec& spec, int N, std::optional<double> free_param,
                        RootChoice root) {
  spec.validate();
  if (N < 0) {
    throw ConstraintError("basis size N must be non-negative");
  }
  const double root_value = required_root(spec.u0());
  TraParams p;
  p.family = spec.family;
  p.N = N;
  if (spec.family == Family::A) {
    p.mu = root_value;
    p.A = spec.us();
    p.nu = free_param ? *free_param : default_free_parameter(spec, N, root);
    p.basis.alpha = 0.5 * (p.mu + 0.5);
    p.basis.beta = 0.5 * (p.nu + 1.5);
  } else {
    p.nu = root == RootChoice::Negative ? -root_value : root_value;
    p.A = -spec.us();
    p.mu = free_param ? *free_param : default_free_parameter(spec, N, root);
    p.basis.alpha = 0.5 * (p.mu + 1.5);
    p.basis.beta = 0.5 * (p.nu + 0.5);
  }
  p.basis.regime = p.regime();
  p.basis.validate();
  return p;
}

RecursionCoeffs recursion_coeffs(double mu, double nu, int N, int n) {
  if (n < 0 || n > N) {
    throw DomainError("recursion_coeffs: index outside 0..N");
  }
  const double s = 2.0 * n + mu + nu;
  RecursionCoeffs out;
  out.C = (nu * nu - mu * mu) / checked_pair_denominator(s);
  if (n < N) {
    const double radicand = (n + 1.0) * (n + mu + 1.0) * (n + nu + 1.0) * (n + mu + nu + 1.0) /
                            ((s + 1.0) * (s + 3.0));
    if (!(radicand >= 0.0)) {
      throw ConstraintError("recursion_coeffs: negative radicand in D_" + std::to_string(n) +
                            " (regime violation)");
    }
    out.D = 2.0 / (s + 2.0) * std::sqrt(radicand);
  }
  return out;
}

RecursionCoeffs recursion_coeffs(const TraParams& p, int n) {
  return recursion_coeffs(p.mu, p.nu, p.N, n);
}

TraParams map_b_to_a(const TraParams& p) {
  TraParams q;
  q.family = p.family == Family::A ? Family::B : Family::A;
  q.mu = p.nu;
  q.nu = p.mu;
  q.A = -p.A;
  q.N = p.N;
  q.basis.regime = q.regime();
  q.basis.alpha = p.basis.beta;
  q.basis.beta = p.basis.alpha;
  return q;
}

std::vector<double> alternate_signs(std::vector<double> f) {
  for (std::size_t n = 1; n < f.size(); n += 2) {
    f[n] = -f[n];
  }
  return f;
}

namespace {

// Family-A pencil entries in the working precision Real.
template <typename Real>
void assemble_family_a(const TraParams& p, std::vector<Real>& t_diag, std::vector<Real>& t_off,
                       std::vector<Real>& r_diag, std::vector<Real>& r_off) {
  const Real mu = p.mu;
  const Real nu = p.nu;
  const auto size = static_cast<std::size_t>(p.N) + 1;
  t_diag.assign(size, Real(0));
  r_diag.assign(size, Real(0));
  t_off.assign(size - 1, Real(0));
  r_off.assign(size - 1, Real(0));
  const Real half(0.5);
  const Real constant = half * (nu + 1) * (nu + 1) - (half * mu * mu - Real(p.A));
  for (int n = 0; n <= p.N; ++n) {
    (void)recursion_coeffs(p.mu, p.nu, p.N, n);  // regime and pole checks
    const Real rn = n;
    const Real s = 2 * rn + mu + nu;
    const Real c = (nu * nu - mu * mu) / (s * (s + 2));
    const Real g1 = rn + half * (mu + nu) + 1;
    const Real kinetic = n == 0 ? Real(0) : 2 * rn * (rn + mu) / s;
    const auto i = static_cast<std::size_t>(n);
    t_diag[i] = kinetic + constant - g1 * g1 * (c + 1);
    r_diag[i] = c + 1;
    if (n < p.N) {
      const Real radicand = (rn + 1) * (rn + mu + 1) * (rn + nu + 1) * (rn + mu + nu + 1) / ((s + 1) * (s + 3));
      const Real d = 2 / (s + 2) * std::sqrt(radicand);
      t_off[i] = -g1 * g1 * d;
      r_off[i] = d;
    }
  }
}

}  // namespace

Pencil build_matrices(const TraParams& params) {
  const TraParams p = params.family == Family::A ? params : map_b_to_a(params);
  std::vector<double> t_diag, t_off, r_diag, r_off;
  assemble_family_a(p, t_diag, t_off, r_diag, r_off);
  return {SymTridiagonal(std::move(t_diag), std::move(t_off)),
          SymTridiagonal(std::move(r_diag), std::move(r_off))};
}

ExtendedPencil build_matrices_extended(const TraParams& params) {
  const TraParams p = params.family == Family::A ? params : map_b_to_a(params);
  ExtendedPencil out;
  assemble_family_a(p, out.t_diag, out.t_off, out.r_diag, out.r_off);
  return out;
}

Pencil build_matrices_direct_b(const TraParams& p) {
  if (p.family != Family::B) {
    throw ConstraintError("build_matrices_direct_b: family-B parameters expected");
  }
  const double mu = p.mu;
  const double nu = p.nu;
  const auto size = static_cast<std::size_t>(p.N) + 1;
  std::vector<double> t_diag(size), t_off(size - 1), r_diag(size), r_off(size - 1);
  const double constant = 0.5 * (mu + 1.0) * (mu + 1.0) - (0.5 * nu * nu + p.A);
  for (int n = 0; n <= p.N; ++n) {
    const RecursionCoeffs rc = recursion_coeffs(mu, nu, p.N, n);
    const double g1 = n + 0.5 * (mu + nu) + 1.0;
    const double kinetic = n == 0 ? 0.0 : 2.0 * n * (n + nu) / (2.0 * n + mu + nu);
    const auto i = static_cast<std::size_t>(n);
    t_diag[i] = kinetic + constant + g1 * g1 * (rc.C - 1.0);
    r_diag[i] = 1.0 - rc.C;
    if (n < p.N) {
      t_off[i] = g1 * g1 * rc.D;
      r_off[i] = -rc.D;
    }
  }
  return {SymTridiagonal(std::move(t_diag), std::move(t_off)),
          SymTridiagonal(std::move(r_diag), std::move(r_off))};
}

double IdentitySides::residual() const noexcept { return std::abs(lhs - rhs); }

double IdentitySides::scaled_residual() const noexcept {
  return residual() / std::max(std::abs(lhs), 1.0);
}

IdentitySides identity_recursion_sum(int n, double mu, double nu, double chi) {
  const double s = 2.0 * n + mu + nu;
  if (s == 0.0 || s + 1.0 == 0.0 || s + 2.0 == 0.0) {
    throw PoleError("identity_recursion_sum: 2n + mu + nu must avoid 0, -1, -2");
  }
  const double a2 = (s + 2.0) * (s + 2.0) + chi;
  const double a0 = s * s + chi;
  IdentitySides out;
  out.lhs = (n + nu + 1.0) * (n + mu + nu + 1.0) * a2 / ((s + 1.0) * (s + 2.0)) +
            n * (n + mu) * a0 / (s * (s + 1.0));
  out.rhs = -4.0 * n * (n + mu) / s + 0.5 * (1.0 + (nu * nu - mu * mu) / (s * (s + 2.0))) * a2;
  return out;
}

IdentitySides identity_diagonal_split(int n, double mu, double nu) {
  const double s = 2.0 * n + mu + nu;
  if (s == 0.0 || s + 2.0 == 0.0) {
    throw PoleError("identity_diagonal_split: 2n + mu + nu must avoid 0 and -2");
  }
  const double c = (nu * nu - mu * mu) / (s * (s + 2.0));
  IdentitySides out;
  out.lhs = 2.0 * (nu - mu) * n * (n + mu + nu + 1.0) / (s * (s + 2.0));
  out.rhs = -2.0 * n * (n + mu) / s + n * (c + 1.0);
  return out;
}

double f_coefficient(int n, double mu, double nu, double eps, double q) {
  const double t = mu + nu + 1.0 + q;
  return eps + n * (n + mu + nu + 1.0) + 0.25 * t * t;
}

DensePencil build_matrices_unsymmetrized(const TraParams& params, double q) {
  const TraParams p = params.family == Family::A ? params : map_b_to_a(params);
  const double mu = p.mu;
  const double nu = p.nu;
  const auto size = static_cast<std::size_t>(p.N) + 1;

  // Row m of sum_n f_n J phi_n = 0 written as M(eps) f = 0, with M(eps) = -(T - eps R).
  auto assemble = [&](double eps) {
    std::vector<double> m(size * size, 0.0);
    for (int row = 0; row <= p.N; ++row) {
      const auto i = static_cast<std::size_t>(row);
      const double s = 2.0 * row + mu + nu;
      const RecursionCoeffs rc = recursion_coeffs(mu, nu, p.N, row);
      const double mixed = row == 0 ? 0.0 : 2.0 * q * (nu - mu) * row * (row + mu + nu + 1.0) / (s * (s + 2.0));
      m[i * size + i] = 0.5 * mu * mu - 0.5 * (nu + q) * (nu + q) - p.A + mixed +
                        f_coefficient(row, mu, nu, eps, q) * (rc.C + 1.0);
      if (row > 0) {
        const RecursionCoeffs prev = recursion_coeffs(mu, nu, p.N, row - 1);
        m[i * size + i - 1] = (f_coefficient(row - 1, mu, nu, eps, q) + q * (row - 1)) * prev.D;
      }
      if (row < p.N) {
        m[i * size + i + 1] =
            (f_coefficient(row + 1, mu, nu, eps, q) - q * (row + mu + nu + 2.0)) * rc.D;
      }
    }
    return m;
  };
  const std::vector<double> m0 = assemble(0.0);
  const std::vector<double> m1 = assemble(1.0);
  DensePencil out;
  out.size = size;
  out.T.resize(size * size);
  out.R.resize(size * size);
  for (std::size_t k = 0; k < size * size; ++k) {
    out.T[k] = -m0[k];
    out.R[k] = m1[k] - m0[k];
  }
  return out;
}

}  // namespace tra
