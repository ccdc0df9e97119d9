#pragma once

// Independent bound-state oracle: Numerov integration of the radial equation and
// shooting on a matching function. Uses only the potential and scalar math.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tra/potential.hpp"

namespace tra {

/// Integration runs on t = ln r with psi = sqrt(r) u, which turns the inverse-square
/// origin into a smooth boundary condition.
struct ShootingConfig {
  double r_min = 1.0e-4;  // units 1/lambda
  /// Fixed outer boundary (units 1/lambda). Unset: outer turning point + tail_factor / kappa,
  /// recomputed per energy, kappa = sqrt(2|E|).
  std::optional<double> r_max;
  double tail_factor = 12.0;
  double h = 1.0e-3;  // step in ln r
  /// Absolute energies (E, not eps). Unset: from the potential minimum up to eps = -1e-3.
  std::optional<std::pair<double, double>> energy_bracket;
  int scan_points = 2000;  // uniform in sqrt|E|
  int max_bisections = 200;
  double eps_tolerance = 1.0e-10;  // absolute, in eps = 2E/lambda^2

  /// Throws ConstraintError on inconsistent settings.
  void validate(const PotentialSpec& spec) const;
};

/// Normalized Casoratian of the outward and inward solutions at the matching point; it changes
/// sign exactly at bound-state energies. E < 0 in absolute units.
[[nodiscard]] double numerov_mismatch(const PotentialSpec& spec, double E, const ShootingConfig& cfg);

/// Regular-solution exponent at the origin: psi ~ r^(s + 1/2) with
/// s = sqrt(1/4 + 2 (V0 or V0 - 2V-) / lambda^2).
[[nodiscard]] double origin_exponent(const PotentialSpec& spec);

struct ShootResult {
  std::vector<double> energies;  // absolute E, deepest first
  std::vector<double> eps;       // 2E / lambda^2
  std::vector<std::string> warnings;
};

/// Brackets roots of the mismatch by a scan uniform in sqrt|E|, then bisects each to the
/// configured eps tolerance. A warning is recorded when fewer than expected_levels are found.
[[nodiscard]] ShootResult shoot_spectrum(const PotentialSpec& spec, const ShootingConfig& cfg,
                                         int expected_levels);

}  // namespace tra
