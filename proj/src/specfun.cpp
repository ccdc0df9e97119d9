#include "tra/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tra/error.hpp"

namespace tra {

namespace {

constexpr double kPi = std::numbers::pi;

// Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,      -1.0 / 360.0,  1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

// Below this real part the argument is shifted upward before applying Stirling.
constexpr double kStirlingThreshold = 15.0;
constexpr double kMaxShift = 1.0e5;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = kStirling.back();
  for (int k = static_cast<int>(kStirling.size()) - 2; k >= 0; --k) {
    series = series * inv2 + kStirling[static_cast<std::size_t>(k)];
  }
  series *= inv;
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

Complex ln_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ln_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z)) {
    throw PoleError("ln_gamma: pole at " + std::to_string(z.real()));
  }
  if (z.real() < -kMaxShift) {
    throw DomainError("ln_gamma: real part too negative");
  }
  // ln Gamma(z) = ln Gamma(z + m) - sum_{k<m} log(z + k); every log(z + k) is taken on
  // the principal branch, which keeps the result analytic off (-inf, 0].
  CompensatedComplexSum shift;
  Complex w = z;
  while (w.real() < kStirlingThreshold) {
    shift.add(std::log(w));
    w += 1.0;
  }
  Complex result = stirling(w) - shift.value();
  if (z.imag() == 0.0 && z.real() > 0.0) {
    result.imag(0.0);
  }
  return result;
}

double arg_gamma_continuous(Complex z) { return ln_gamma(z).imag(); }

double arg_gamma(Complex z) {
  const double phase = ln_gamma(z).imag();
  double reduced = std::remainder(phase, 2.0 * kPi);
  if (reduced <= -kPi) {
    reduced += 2.0 * kPi;
  }
  return reduced;
}

SignedLog ln_abs_gamma(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("ln_abs_gamma: non-finite argument");
  }
  if (x > 0.0) {
    return {ln_gamma(Complex(x, 0.0)).real(), 1};
  }
  if (x == std::floor(x)) {
    throw PoleError("ln_abs_gamma: pole at " + std::to_string(x));
  }
  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)) with Gamma(1 - x) > 0.
  const double frac = x - std::round(x);
  const double s = std::sin(kPi * frac) * ((static_cast<long long>(std::round(x)) % 2 == 0) ? 1.0 : -1.0);
  SignedLog out;
  out.log_abs = std::log(kPi) - std::log(std::abs(s)) - ln_gamma(Complex(1.0 - x, 0.0)).real();
  out.sign = s > 0.0 ? 1 : -1;
  return out;
}

double pochhammer(double a, int n) {
  if (n < 0) {
    throw DomainError("pochhammer: negative order");
  }
  double p = 1.0;
  for (int j = 0; j < n; ++j) {
    p *= a + j;
  }
  return p;
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) {
    throw DomainError("pochhammer: negative order");
  }
  Complex p = 1.0;
  for (int j = 0; j < n; ++j) {
    p *= a + static_cast<double>(j);
  }
  return p;
}

Complex log_pochhammer(Complex a, int n) {
  if (n < 0) {
    throw DomainError("log_pochhammer: negative order");
  }
  CompensatedComplexSum s;
  for (int j = 0; j < n; ++j) {
    const Complex f = a + static_cast<double>(j);
    if (f == Complex(0.0, 0.0)) {
      throw PoleError("log_pochhammer: zero factor");
    }
    s.add(std::log(f));
  }
  return s.value();
}

Complex hyp4f3_terminating(int n, const std::array<Complex, 3>& numerators,
                           const std::array<Complex, 3>& denominators) {
  if (n < 0) {
    throw DomainError("hyp4f3_terminating: negative degree");
  }
  CompensatedComplexSum sum;
  Complex term = 1.0;
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    Complex den = kk + 1.0;
    for (const Complex& q : denominators) {
      const Complex f = q + kk;
      if (f == Complex(0.0, 0.0)) {
        throw PoleError("hyp4f3_terminating: denominator Pochhammer vanishes at k = " +
                        std::to_string(k));
      }
      den *= f;
    }
    Complex num = static_cast<double>(k - n);
    for (const Complex& p : numerators) {
      num *= p + kk;
    }
    term *= num / den;
    sum.add(term);
  }
  return sum.value();
}

}  // namespace tra
