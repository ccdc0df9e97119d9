#include "tra/scattering.hpp"

#include <cmath>
#include <numbers>

#include "tra/error.hpp"

namespace tra {

Complex phase_shift_argument(const TraParams& p, double eps, ZBranch branch, bool conjugate) {
  if (!(eps > 0.0)) {
    throw DomainError("phase_shift: eps must be positive");
  }
  const WilsonParams wp = params_from_physics(p, eps, branch);
  const TraParams pa = p.family == Family::A ? p : map_b_to_a(p);
  const double k = std::sqrt(eps);
  // z is real or purely imaginary; the imaginary case adds its own contribution
  return Complex(0.5 * (pa.mu + 1.0), 0.0) - wp.z + Complex(0.0, conjugate ? -k : k);
}

double phase_shift(const TraParams& p, double eps, ZBranch branch) {
  return -2.0 * arg_gamma(phase_shift_argument(p, eps, branch));
}

std::vector<double> unwrap_phase(const std::vector<double>& values) {
  std::vector<double> out(values);
  const double two_pi = 2.0 * std::numbers::pi;
  double offset = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    offset -= two_pi * std::round(step / two_pi);
    out[i] = values[i] + offset;
  }
  return out;
}

PhaseShiftCurve phase_shift_curve(const TraParams& p, const std::vector<double>& eps_grid, bool unwrap,
                                  ZBranch branch) {
  PhaseShiftCurve c;
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0) || (i > 0 && !(eps_grid[i] > eps_grid[i - 1]))) {
      throw DomainError("phase_shift_curve: energies must be positive and strictly increasing");
    }
  }
  c.energies = eps_grid;
  c.delta.reserve(eps_grid.size());
  for (double e : eps_grid) {
    c.delta.push_back(phase_shift(p, e, branch));
  }
  if (unwrap) {
    c.delta_unwrapped = unwrap_phase(c.delta);
    c.unwrapped = true;
  }
  return c;
}

}  // namespace tra
