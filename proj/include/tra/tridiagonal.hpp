#pragma once

#include <cstddef>
#include <vector>

namespace tra {

/// Real symmetric tridiagonal matrix; only the first super-diagonal is stored.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples rows i and i+1

  SymTridiagonal() = default;
  SymTridiagonal(std::vector<double> d, std::vector<double> e);

  [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
  /// Entry (i, j); zero outside the band.
  [[nodiscard]] double at(std::size_t i, std::size_t j) const;
  /// y = M x
  [[nodiscard]] std::vector<double> multiply(const std::vector<double>& x) const;
  /// Max absolute row sum.
  [[nodiscard]] double norm_inf() const noexcept;
  [[nodiscard]] SymTridiagonal negated() const;
};

}  // namespace tra
