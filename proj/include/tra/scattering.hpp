#pragma once

// Continuum phase shift delta(E) = -2 arg Gamma((mu+1)/2 - z + i sqrt(eps)).

#include <vector>

#include "tra/specfun.hpp"
#include "tra/tra_core.hpp"
#include "tra/wilson.hpp"

namespace tra {

/// The Gamma argument (mu+1)/2 - z + i sqrt(eps) of the (mapped) family-A parameters;
/// `conjugate` flips the sign of the i sqrt(eps) term.
[[nodiscard]] Complex phase_shift_argument(const TraParams& p, double eps,
                                           ZBranch branch = ZBranch::Auto, bool conjugate = false);

/// Principal-value phase shift in radians, in [-2pi, 2pi). Throws DomainError for eps <= 0
/// and PoleError if the Gamma argument is a non-positive integer.
[[nodiscard]] double phase_shift(const TraParams& p, double eps, ZBranch branch = ZBranch::Auto);

struct PhaseShiftCurve {
  std::vector<double> energies;  // eps, which equals E in units lambda^2/2
  std::vector<double> delta;     // principal values
  std::vector<double> delta_unwrapped;  // filled when unwrapped
  bool unwrapped = false;
};

/// Throws DomainError unless the grid is positive and strictly increasing.
[[nodiscard]] PhaseShiftCurve phase_shift_curve(const TraParams& p, const std::vector<double>& eps_grid,
                                                bool unwrap, ZBranch branch = ZBranch::Auto);

/// Adds multiples of 2 pi so that consecutive values differ by at most pi.
[[nodiscard]] std::vector<double> unwrap_phase(const std::vector<double>& values);

}  // namespace tra
