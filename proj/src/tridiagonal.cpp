#include "tra/tridiagonal.hpp"

#include <algorithm>
#include <cmath>

#include "tra/error.hpp"

namespace tra {

SymTridiagonal::SymTridiagonal(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), offdiag(std::move(e)) {
  if (!diag.empty() && offdiag.size() + 1 != diag.size()) {
    throw DomainError("SymTridiagonal: off-diagonal length must be one less than the diagonal");
  }
}

double SymTridiagonal::at(std::size_t i, std::size_t j) const {
  if (i == j) {
    return diag.at(i);
  }
  if (i + 1 == j) {
    return offdiag.at(i);
  }
  if (j + 1 == i) {
    return offdiag.at(j);
  }
  return 0.0;
}

std::vector<double> SymTridiagonal::multiply(const std::vector<double>& x) const {
  const std::size_t n = size();
  if (x.size() != n) {
    throw DomainError("SymTridiagonal::multiply: dimension mismatch");
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = diag[i] * x[i];
    if (i > 0) {
      y[i] += offdiag[i - 1] * x[i - 1];
    }
    if (i + 1 < n) {
      y[i] += offdiag[i] * x[i + 1];
    }
  }
  return y;
}

double SymTridiagonal::norm_inf() const noexcept {
  double best = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) {
      row += std::abs(offdiag[i - 1]);
    }
    if (i + 1 < n) {
      row += std::abs(offdiag[i]);
    }
    best = std::max(best, row);
  }
  return best;
}

SymTridiagonal SymTridiagonal::negated() const {
  SymTridiagonal m = *this;
  for (double& v : m.diag) {
    v = -v;
  }
  for (double& v : m.offdiag) {
    v = -v;
  }
  return m;
}

}  // namespace tra
