#pragma once

// Test-side reference implementations. None of these call into the library.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;
using rational = boost::multiprecision::cpp_rational;

// ln Gamma(z), principal branch: shift to |z| >= 30 with principal logs (which keeps the
// branch of the analytic continuation off the negative axis), then the Stirling series.
inline std::complex<long double> log_gamma(std::complex<long double> z) {
  using C = std::complex<long double>;
  C shift = 0.0L;
  while (std::abs(z) < 30.0L || z.real() < 0.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  // Bernoulli B_2k / (2k (2k-1))
  static constexpr long double coef[] = {1.0L / 12,        -1.0L / 360,         1.0L / 1260,
                                         -1.0L / 1680,     1.0L / 1188,         -691.0L / 360360,
                                         1.0L / 156,       -3617.0L / 122400};
  const C inv = 1.0L / z;
  const C inv2 = inv * inv;
  C series = 0.0L;
  C power = inv;
  for (long double c : coef) {
    series += c * power;
    power *= inv2;
  }
  const long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  return (z - 0.5L) * std::log(z) - z + half_log_2pi + series - shift;
}

// Terminating 4F3 at unit argument with rational parameters, summed exactly.
inline rational hyp4f3_exact(int n, const std::array<rational, 3>& num, const std::array<rational, 3>& den) {
  rational term = 1;
  rational sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= rational(k - n) * (num[0] + k) * (num[1] + k) * (num[2] + k) /
            ((den[0] + k) * (den[1] + k) * (den[2] + k) * (k + 1));
    sum += term;
  }
  return sum;
}

// P_n^{(mu,nu)}(x) from its 2F1 form in 50-digit floating point.
inline big jacobi(int n, big mu, big nu, big x) {
  big term = 1;
  big sum = 1;
  const big y = (1 - x) / 2;
  for (int k = 0; k < n; ++k) {
    term *= big(k - n) * (n + mu + nu + 1 + k) / ((mu + 1 + k) * (k + 1)) * y;
    sum += term;
  }
  big lead = 1;
  for (int k = 0; k < n; ++k) {
    lead *= (mu + 1 + k) / (k + 1);
  }
  return lead * sum;
}

// Family-A pencil entries from the printed recursion, in 50 digits.
struct BigPencil {
  std::vector<big> t_diag, t_off, r_diag, r_off;
};

inline BigPencil pencil(big mu, big nu, big A, int N) {
  BigPencil p;
  for (int n = 0; n <= N; ++n) {
    const big s = 2 * n + mu + nu;
    const big g = n + (mu + nu) / 2;
    const big C = (nu * nu - mu * mu) / (s * (s + 2));
    p.t_diag.push_back(2 * n * (n + mu) / s - (g + 1) * (g + 1) * (C + 1) + (nu + 1) * (nu + 1) / 2 -
                       (mu * mu / 2 - A));
    p.r_diag.push_back(C + 1);
    if (n < N) {
      const big D = 2 / (s + 2) * sqrt((n + 1) * (n + mu + 1) * (n + nu + 1) * (n + mu + nu + 1) / ((s + 1) * (s + 3)));
      p.t_off.push_back(-(g + 1) * (g + 1) * D);
      p.r_off.push_back(D);
    }
  }
  return p;
}

}  // namespace oracle
