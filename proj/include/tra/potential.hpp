#pragma once

// The two short-range inverse-square singular hyperbolic potentials.
//   family A: V(r) = V0 / sinh^2(lr) + (V+/2) / cosh^2(lr/2)
//   family B: V(r) = V0 / sinh^2(lr) - (V-/2) / sinh^2(lr/2)
// Energies are in absolute units (hbar = m = 1); l is the inverse length scale.

#include <string_view>

namespace tra {

enum class Family { A, B };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
/// Accepts "A"/"a"/"B"/"b"; throws ConstraintError otherwise.
[[nodiscard]] Family parse_family(std::string_view s);

struct PotentialSpec {
  Family family = Family::A;
  double v0 = 0.0;
  double vs = 0.0;  // V+ for family A, V- for family B
  double lambda = 1.0;

  /// Builds a spec from strengths quoted in units of lambda^2 / 2.
  [[nodiscard]] static PotentialSpec from_half_lambda2(Family family, double v0, double vs,
                                                       double lambda = 1.0);

  /// 2 V0 / lambda^2
  [[nodiscard]] double u0() const noexcept;
  /// 2 Vs / lambda^2
  [[nodiscard]] double us() const noexcept;

  /// lambda > 0 and 2 V0 / lambda^2 >= -1/4. Throws ConstraintError.
  void validate() const;

  /// V0 - 2 Vs > -lambda^2 / 8, with the family's own strength Vs.
  [[nodiscard]] bool supports_bound_states() const noexcept;
};

/// Half-angle form. Throws DomainError for r <= 0.
[[nodiscard]] double potential_value(const PotentialSpec& spec, double r);

/// The same potential written with cosh(lr) +- 1 denominators.
[[nodiscard]] double potential_value_cosh_form(const PotentialSpec& spec, double r);

}  // namespace tra
