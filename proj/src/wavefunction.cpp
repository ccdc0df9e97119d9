#include "tra/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tra/error.hpp"
#include "tra/jacobi.hpp"
#include "tra/spectra.hpp"

namespace tra {

namespace {

void check_grid(const std::vector<double>& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0) || (i > 0 && !(r[i] > r[i - 1]))) {
      throw DomainError("wavefunction: r grid must be positive and strictly increasing");
    }
  }
}

double exact_level(const TraParams& p, int k, ZBranch branch) {
  const ExactSpectrum ex = exact_spectrum(p, branch);
  if (k < 0 || k > ex.k_max) {
    throw ConstraintError("wavefunction: level " + std::to_string(k) + " outside 0.." +
                          std::to_string(ex.k_max));
  }
  return ex.eps[static_cast<std::size_t>(k)];
}

// f_n for the basis of p: W~_n for family A, (-1)^n W~_n of the mapped problem for family B.
std::vector<double> series_coefficients(const TraParams& p, const WilsonParams& wp, int n_max) {
  const std::vector<Complex> w = wilson_tilde_recursion(n_max, wp);
  std::vector<double> f(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    f[n] = w[n].real();
  }
  return p.family == Family::A ? f : alternate_signs(std::move(f));
}

// sum_n f_n phi_n(cosh lr), with the weight taken in half-angle form so that small r keeps
// full relative precision.
std::vector<double> evaluate_series(const TraParams& p, const std::vector<double>& f, double lambda,
                                    const std::vector<double>& r_grid) {
  const int n_max = static_cast<int>(f.size()) - 1;
  std::vector<double> cn(f.size());
  for (int n = 0; n <= n_max; ++n) {
    cn[static_cast<std::size_t>(n)] = basis_normalization(n, p.regime());
  }
  std::vector<double> psi(r_grid.size());
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double half = 0.5 * lambda * r_grid[i];
    const double sh = std::sinh(half);
    const double ch = std::cosh(half);
    const double x = 1.0 + 2.0 * sh * sh;
    const double log_w = p.basis.alpha * (std::numbers::ln2 + 2.0 * std::log(sh)) +
                         p.basis.beta * (std::numbers::ln2 + 2.0 * std::log(ch));
    const std::vector<double> P = jacobi_recurrence(n_max, p.mu, p.nu, x);
    double s = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      s += f[n] * cn[n] * P[n];
    }
    psi[i] = std::exp(log_w) * s;
  }
  return psi;
}

}  // namespace

double terminating_free_parameter(const PotentialSpec& spec) {
  spec.validate();
  const double root = std::sqrt(0.25 + spec.u0());
  if (spec.family == Family::A) {
    const double disc = root * root - 2.0 * spec.us();
    if (disc < 0.0) {
      throw ConstraintError("wavefunction: z is not real, no bound states");
    }
    return -1.0 - std::sqrt(disc);
  }
  // mapped problem: mu' = nu_B = -root, A' = us, z' = -sqrt(mu'^2 - 2A')/2
  const double disc = root * root - 2.0 * spec.us();
  if (disc < 0.0) {
    throw ConstraintError("wavefunction: z is not real, no bound states");
  }
  return -1.0 + std::sqrt(disc);
}

TraParams wavefunction_params(const PotentialSpec& spec, int N, int k, const WavefunctionOptions& options) {
  if (k < 0) {
    throw ConstraintError("wavefunction: negative level");
  }
  if (options.free_param) {
    if (k > N) {
      throw ConstraintError("wavefunction: level k = " + std::to_string(k) + " needs N >= k");
    }
    return derive_params(spec, N, options.free_param);
  }
  return derive_params(spec, k, terminating_free_parameter(spec));
}

WavefunctionSample bound_state_psi(const PotentialSpec& spec, int N, int k, const std::vector<double>& r_grid,
                                   const WavefunctionOptions& options) {
  check_grid(r_grid);
  const TraParams p = wavefunction_params(spec, N, k, options);
  WavefunctionSample out;
  out.level = k;
  out.r = r_grid;
  out.eps = exact_level(p, k, options.branch);
  out.free_param = spec.family == Family::A ? p.nu : p.mu;
  const WilsonParams wp = params_from_physics(p, out.eps, options.branch);
  out.coefficients = series_coefficients(p, wp, k);
  out.psi = evaluate_series(p, out.coefficients, spec.lambda, r_grid);
  if (options.normalize) {
    const double norm = std::sqrt(trapezoid_inner(out.r, out.psi, out.psi));
    if (norm > 0.0) {
      for (double& v : out.psi) {
        v /= norm;
      }
      out.normalized = true;
    }
  }
  return out;
}

std::vector<double> default_radial_grid(double r_end, int points) {
  if (!(r_end > 0.0) || points < 1) {
    throw DomainError("default_radial_grid: need r_end > 0 and at least one point");
  }
  std::vector<double> r(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) {
    r[static_cast<std::size_t>(i - 1)] = r_end * i / points;
  }
  return r;
}

ResidualReport schrodinger_residual(const PotentialSpec& spec, const WavefunctionSample& sample, double eps,
                                    double coarse_threshold, double r_inner) {
  const std::vector<double>& r = sample.r;
  const std::vector<double>& psi = sample.psi;
  const std::size_t n = r.size();
  if (n < 9 || psi.size() != n) {
    throw DomainError("schrodinger_residual: need at least 9 samples");
  }
  const double h = (r[n - 1] - r[0]) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(r[i] - r[i - 1] - h) > 1.0e-6 * h) {
      throw DomainError("schrodinger_residual: grid is not uniform");
    }
  }
  const double E = 0.5 * eps * spec.lambda * spec.lambda;
  const double r_from = r_inner / spec.lambda;

  // pointwise residual with stencil spacing m*h
  auto pointwise = [&](std::size_t i, std::size_t m) {
    const double hm = static_cast<double>(m) * h;
    const double d2 = (-psi[i + 2 * m] + 16.0 * psi[i + m] - 30.0 * psi[i] + 16.0 * psi[i - m] -
                       psi[i - 2 * m]) /
                      (12.0 * hm * hm);
    return -0.5 * d2 + (potential_value(spec, r[i]) - E) * psi[i];
  };

  ResidualReport out;
  double scale = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    scale = std::max(scale, std::abs(E * psi[i]));
  }
  if (!(scale > 0.0)) {
    out.degenerate = true;
    return out;
  }
  double worst = 0.0;
  double worst_all = 0.0;
  double estimate = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double rh = pointwise(i, 1);
    worst_all = std::max(worst_all, std::abs(rh));
    if (r[i] < r_from) {
      continue;
    }
    ++out.points_used;
    worst = std::max(worst, std::abs(rh));
    if (i >= 4 && i + 4 < n) {
      estimate = std::max(estimate, std::abs(pointwise(i, 2) - rh) / 15.0);
    }
  }
  if (out.points_used == 0) {
    throw DomainError("schrodinger_residual: no interior point with lambda r >= r_inner");
  }
  out.residual = worst / scale;
  out.full_grid_residual = worst_all / scale;
  out.truncation_estimate = estimate / scale;
  out.coarse_warning = out.truncation_estimate > coarse_threshold;
  return out;
}

int count_nodes(const std::vector<double>& psi, double rel_floor) {
  double peak = 0.0;
  for (double v : psi) {
    peak = std::max(peak, std::abs(v));
  }
  const double floor = rel_floor * peak;
  int nodes = 0;
  int last = 0;
  for (double v : psi) {
    if (std::abs(v) <= floor) {
      continue;
    }
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last) {
      ++nodes;
    }
    last = s;
  }
  return nodes;
}

TruncationReport truncation_sensitivity(const PotentialSpec& spec, int N, int k, int n_ext,
                                        const std::vector<double>& r_grid, const WavefunctionOptions& options) {
  check_grid(r_grid);
  if (n_ext <= k) {
    throw DomainError("truncation_sensitivity: n_ext must exceed k");
  }
  const TraParams p = wavefunction_params(spec, N, k, options);
  const double eps = exact_level(p, k, options.branch);
  const WilsonParams wp = params_from_physics(p, eps, options.branch);
  const std::vector<Complex> w = wilson_tilde_recursion(k, wp);

  TruncationReport out;
  const WilsonRow row = wilson_row(k, wp);
  const Complex diag = wp.z_sq + row.diagonal;
  Complex lhs = diag * w[static_cast<std::size_t>(k)];
  // z^2 and B_k cancel at the level, so scale by their sizes rather than their sum
  double scale = (std::abs(wp.z_sq) + std::abs(row.diagonal)) * std::abs(w[static_cast<std::size_t>(k)]);
  double row_size = std::abs(diag) + std::abs(row.off);
  if (k > 0) {
    const Complex prev_off = wilson_row(k - 1, wp).off;
    lhs += prev_off * w[static_cast<std::size_t>(k - 1)];
    scale += std::abs(prev_off * w[static_cast<std::size_t>(k - 1)]);
    row_size += std::abs(prev_off);
  }
  out.row_residual = scale > 0.0 ? std::abs(lhs) / scale : 0.0;
  out.coupling = row_size > 0.0 ? std::abs(row.off) / row_size : 0.0;
  out.decoupled = out.coupling < 1.0e-12;
  if (out.decoupled) {
    return out;  // terms beyond k multiply a vanishing coupling
  }
  if (n_ext > p.N) {
    throw ConstraintError("truncation_sensitivity: n_ext = " + std::to_string(n_ext) +
                          " exceeds the basis size N = " + std::to_string(p.N));
  }
  const std::vector<double> f_ext = series_coefficients(p, wp, n_ext);
  const std::vector<double> f(f_ext.begin(), f_ext.begin() + k + 1);
  const std::vector<double> base = evaluate_series(p, f, spec.lambda, r_grid);
  const std::vector<double> ext = evaluate_series(p, f_ext, spec.lambda, r_grid);
  double peak = 0.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    peak = std::max(peak, std::abs(base[i]));
    diff = std::max(diff, std::abs(ext[i] - base[i]));
  }
  out.max_rel_change = peak > 0.0 ? diff / peak : diff;
  return out;
}

double trapezoid_inner(const std::vector<double>& r, const std::vector<double>& f, const std::vector<double>& g) {
  if (r.size() != f.size() || r.size() != g.size()) {
    throw DomainError("trapezoid_inner: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i) {
    s += 0.5 * (r[i] - r[i - 1]) * (f[i] * g[i] + f[i - 1] * g[i - 1]);
  }
  return s;
}

}  // namespace tra
