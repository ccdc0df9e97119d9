#pragma once

// Scalar special functions: complex log-gamma, Pochhammer symbols and
// terminating hypergeometric sums. Everything here is a pure function.

#include <array>
#include <complex>

namespace tra {

using Complex = std::complex<double>;

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double x) noexcept;
  [[nodiscard]] double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Component-wise compensated accumulator for complex terms.
class CompensatedComplexSum {
 public:
  void add(Complex z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  [[nodiscard]] Complex value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Real value carried as log|v| plus a sign in {-1, +1}.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};

/// Log-gamma continued analytically off the cut (-inf, 0]; real for real positive
/// arguments and satisfying ln_gamma(z+1) = ln_gamma(z) + log(z) without 2*pi jumps.
/// Throws PoleError at non-positive integers.
[[nodiscard]] Complex ln_gamma(Complex z);

/// Principal argument of Gamma(z), reduced to (-pi, pi].
[[nodiscard]] double arg_gamma(Complex z);

/// Im ln_gamma(z): the argument of Gamma continued without branch jumps.
[[nodiscard]] double arg_gamma_continuous(Complex z);

/// log|Gamma(x)| and sign(Gamma(x)) for real x.
[[nodiscard]] SignedLog ln_abs_gamma(double x);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
[[nodiscard]] double pochhammer(double a, int n);
[[nodiscard]] Complex pochhammer(Complex a, int n);

/// Sum of principal logs of a, a+1, ..., a+n-1; a log of (a)_n that never overflows.
[[nodiscard]] Complex log_pochhammer(Complex a, int n);

/// 4F3(-n, p1, p2, p3; q1, q2, q3 | 1) as the finite sum of its n+1 terms.
/// Throws PoleError if a denominator Pochhammer vanishes inside the sum.
[[nodiscard]] Complex hyp4f3_terminating(int n, const std::array<Complex, 3>& numerators,
                                         const std::array<Complex, 3>& denominators);

}  // namespace tra
