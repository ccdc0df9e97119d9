#include "tra/potential.hpp"

#include <cmath>
#include <string>

#include "tra/error.hpp"

namespace tra {

std::string_view to_string(Family f) noexcept { return f == Family::A ? "A" : "B"; }

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") {
    return Family::A;
  }
  if (s == "B" || s == "b") {
    return Family::B;
  }
  throw ConstraintError("unknown potential family '" + std::string(s) + "' (expected A or B)");
}

PotentialSpec PotentialSpec::from_half_lambda2(Family family, double v0, double vs, double lambda) {
  const double unit = 0.5 * lambda * lambda;
  return PotentialSpec{family, v0 * unit, vs * unit, lambda};
}

double PotentialSpec::u0() const noexcept { return 2.0 * v0 / (lambda * lambda); }

double PotentialSpec::us() const noexcept { return 2.0 * vs / (lambda * lambda); }

void PotentialSpec::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ConstraintError("potential: lambda must be positive and finite");
  }
  if (!std::isfinite(v0) || !std::isfinite(vs)) {
    throw ConstraintError("potential: strengths must be finite");
  }
  if (!(u0() >= -0.25)) {
    throw ConstraintError("potential: reality requires 2 V0 / lambda^2 >= -1/4 (got " +
                          std::to_string(u0()) + ")");
  }
}

bool PotentialSpec::supports_bound_states() const noexcept {
  return v0 - 2.0 * vs > -lambda * lambda / 8.0;
}

double potential_value(const PotentialSpec& spec, double r) {
  if (!(r > 0.0)) {
    throw DomainError("potential_value: r must be positive (singular at r = 0)");
  }
  const double lr = spec.lambda * r;
  const double s = std::sinh(lr);
  const double singular = spec.v0 / (s * s);
  if (spec.family == Family::A) {
    const double c = std::cosh(0.5 * lr);
    return singular + 0.5 * spec.vs / (c * c);
  }
  const double sh = std::sinh(0.5 * lr);
  return singular - 0.5 * spec.vs / (sh * sh);
}

double potential_value_cosh_form(const PotentialSpec& spec, double r) {
  if (!(r > 0.0)) {
    throw DomainError("potential_value_cosh_form: r must be positive");
  }
  const double lr = spec.lambda * r;
  const double s = std::sinh(lr);
  const double singular = spec.v0 / (s * s);
  if (spec.family == Family::A) {
    return singular + spec.vs / (std::cosh(lr) + 1.0);
  }
  return singular - spec.vs / (std::cosh(lr) - 1.0);
}

}  // namespace tra
