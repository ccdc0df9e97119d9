#include "tra/wilson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tra/error.hpp"

namespace tra {

namespace {

const TraParams& as_family_a(const TraParams& p, TraParams& storage) {
  if (p.family == Family::A) {
    return p;
  }
  storage = map_b_to_a(p);
  return storage;
}

Complex nonzero(Complex v, const char* what, int n) {
  if (v == Complex(0.0, 0.0)) {
    throw PoleError(std::string("wilson: vanishing ") + what + " at n = " + std::to_string(n));
  }
  return v;
}

// Diagonal coefficient of the normalized recursion (without the sign flip of W~).
Complex diagonal_coeff(int n, const WilsonParams& wp) {
  const Complex& a = wp.a;
  const Complex& b = wp.b;
  const Complex& c = wp.c;
  const Complex& d = wp.d;
  const Complex s = wp.sum();
  const double nn = n;
  Complex out = (nn + a + b) * (nn + a + c) * (nn + a + d) * (nn + s - 1.0) /
                nonzero((2.0 * nn + s) * (2.0 * nn + s - 1.0), "diagonal denominator", n);
  if (n > 0) {
    out += nn * (nn + b + c - 1.0) * (nn + b + d - 1.0) * (nn + c + d - 1.0) /
           nonzero((2.0 * nn + s - 1.0) * (2.0 * nn + s - 2.0), "diagonal denominator", n);
  }
  return out - a * a;
}

// Off-diagonal coefficient coupling W_n and W_{n+1}.
Complex offdiagonal_raw(int n, const WilsonParams& wp) {
  const Complex& a = wp.a;
  const Complex& b = wp.b;
  const Complex& c = wp.c;
  const Complex& d = wp.d;
  const Complex s = wp.sum();
  const double nn = n;
  const Complex radicand = (nn + 1.0) * (nn + a + b) * (nn + c + d) * (nn + a + c) * (nn + a + d) *
                           (nn + b + c) * (nn + b + d) * (nn + s - 1.0) /
                           nonzero((2.0 * nn + s - 1.0) * (2.0 * nn + s + 1.0),
                                   "off-diagonal denominator", n);
  return std::sqrt(radicand) / nonzero(2.0 * nn + s, "2n+a+b+c+d", n);
}

Complex offdiagonal_coeff(int n, const WilsonParams& wp) {
  return nonzero(offdiagonal_raw(n, wp), "off-diagonal coefficient", n);
}

}  // namespace

int z_sign(const TraParams& p, ZBranch branch) {
  switch (branch) {
    case ZBranch::Positive:
      return 1;
    case ZBranch::Negative:
      return -1;
    case ZBranch::Auto:
      break;
  }
  return p.family == Family::A ? 1 : -1;
}

WilsonParams params_from_physics(const TraParams& p, double eps, ZBranch branch) {
  TraParams storage;
  const TraParams& pa = as_family_a(p, storage);
  const Complex i_sqrt_eps = eps >= 0.0 ? Complex(0.0, std::sqrt(eps)) : Complex(-std::sqrt(-eps), 0.0);
  WilsonParams wp;
  wp.a = 0.5 * (pa.mu + 1.0) + i_sqrt_eps;
  wp.b = 0.5 * (pa.mu + 1.0) - i_sqrt_eps;
  wp.c = 0.5 * (pa.nu + 1.0);
  wp.d = wp.c;
  wp.z_sq = 0.25 * (pa.mu * pa.mu - 2.0 * pa.A);
  const Complex root = wp.z_sq >= 0.0 ? Complex(std::sqrt(wp.z_sq), 0.0)
                                      : Complex(0.0, std::sqrt(-wp.z_sq));
  wp.z = static_cast<double>(z_sign(p, branch)) * root;
  return wp;
}

std::vector<Complex> wilson_tilde_recursion(int n_max, const WilsonParams& wp) {
  if (n_max < 0) {
    throw DomainError("wilson_tilde_recursion: negative degree");
  }
  std::vector<Complex> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  Complex previous_off = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Complex off = offdiagonal_coeff(n, wp);
    Complex rhs = (wp.z_sq + diagonal_coeff(n, wp)) * w[i];
    if (n > 0) {
      rhs += previous_off * w[i - 1];
    }
    w[i + 1] = -rhs / off;
    previous_off = off;
  }
  return w;
}

WilsonRow wilson_row(int n, const WilsonParams& wp) {
  if (n < 0) {
    throw DomainError("wilson_row: negative index");
  }
  return {diagonal_coeff(n, wp), offdiagonal_raw(n, wp)};
}

std::vector<Complex> wilson_recursion(int n_max, const WilsonParams& wp, Complex x) {
  if (n_max < 0) {
    throw DomainError("wilson_recursion: negative degree");
  }
  std::vector<Complex> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  Complex previous_off = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Complex off = offdiagonal_coeff(n, wp);
    Complex rhs = (diagonal_coeff(n, wp) - x) * w[i];
    if (n > 0) {
      rhs -= previous_off * w[i - 1];
    }
    w[i + 1] = rhs / off;
    previous_off = off;
  }
  return w;
}

HypergeomValue wilson_tilde_hypergeom(int n, const WilsonParams& wp) {
  if (n < 0) {
    throw DomainError("wilson_tilde_hypergeom: negative degree");
  }
  if (n == 0) {
    return {Complex(1.0, 0.0), false};
  }
  const Complex& a = wp.a;
  const Complex& b = wp.b;
  const Complex& c = wp.c;
  const Complex& d = wp.d;
  const Complex s = wp.sum();
  const double nn = n;

  const Complex log_radicand =
      std::log(nonzero(2.0 * nn + s - 1.0, "2n+s-1", n)) - std::log(nonzero(nn + s - 1.0, "n+s-1", n)) +
      log_pochhammer(a + b, n) + log_pochhammer(a + c, n) + log_pochhammer(a + d, n) +
      log_pochhammer(s, n) - log_pochhammer(b + c, n) - log_pochhammer(b + d, n) -
      log_pochhammer(c + d, n) - std::lgamma(nn + 1.0);
  Complex log_prefactor = 0.5 * log_radicand;

  // The recursion fixes the leading coefficient of W_n in x as 1 / prod_{k<n} off_k, and
  // off_k carries the sign of 2k+s. Only its phase is borrowed here, to pick the root.
  double target = 0.0;
  for (int k = 0; k < n; ++k) {
    target -= std::arg(offdiagonal_coeff(k, wp));
  }
  const Complex log_lead = log_prefactor + log_pochhammer(nn + s - 1.0, n) -
                           log_pochhammer(a + b, n) - log_pochhammer(a + c, n) -
                           log_pochhammer(a + d, n);
  const double phase = std::remainder(log_lead.imag() - target, 2.0 * std::numbers::pi);
  if (std::abs(std::sin(phase)) > 1.0e-8) {
    // neither root reproduces the phase; happens only off the real-radicand cases
    HypergeomValue fallback;
    fallback.radicand_negative = true;
    fallback.value = wilson_tilde_recursion(n, wp).back();
    return fallback;
  }
  if (std::cos(phase) < 0.0) {
    log_prefactor += Complex(0.0, std::numbers::pi);
  }

  const Complex f = hyp4f3_terminating(n, {nn + s - 1.0, a + wp.z, a - wp.z}, {a + b, a + c, a + d});
  Complex value = 0.0;
  if (f != Complex(0.0, 0.0)) {
    value = std::exp(log_prefactor + std::log(f));
  }
  if (n % 2 == 1) {
    value = -value;
  }
  return {value, false};
}

int max_bound_level(const TraParams& p) {
  TraParams storage;
  const TraParams& pa = as_family_a(p, storage);
  const double disc = pa.mu * pa.mu - 2.0 * pa.A;
  if (disc < 0.0) {
    return -1;
  }
  const double two_z = z_sign(p) * std::sqrt(disc);
  const double bound = 0.5 * (two_z - pa.mu - 1.0);
  if (bound < 0.0) {
    return -1;
  }
  return static_cast<int>(std::floor(bound));
}

double bound_state_condition(const TraParams& p, int k) {
  const int k_max = max_bound_level(p);
  if (k_max < 0) {
    throw ConstraintError("bound_state_condition: the potential supports no bound state");
  }
  if (k < 0 || k > k_max) {
    throw ConstraintError("bound_state_condition: level " + std::to_string(k) +
                          " outside 0.." + std::to_string(k_max));
  }
  TraParams storage;
  const TraParams& pa = as_family_a(p, storage);
  const double z = 0.5 * z_sign(p) * std::sqrt(pa.mu * pa.mu - 2.0 * pa.A);
  // z = k + b with b = (mu+1)/2 + sqrt(|eps|): the decaying-branch partner of a.
  const double sqrt_abs_eps = z - k - 0.5 * (pa.mu + 1.0);
  return -sqrt_abs_eps * sqrt_abs_eps;
}

}  // namespace tra
