#pragma once

// Self-check suite behind `tra-spectra verify`: algebraic identities, Jacobi properties,
// the two Wilson evaluation paths, the family exchange map and the ODE oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tra/potential.hpp"

namespace tra {

enum class CheckStatus { Pass, Fail, Skipped };

[[nodiscard]] std::string_view to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  double metric = 0.0;     // worst observed value of the checked quantity
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyConfig {
  PotentialSpec spec;
  int N = 10;
  std::optional<double> free_param;
  bool quick = false;
  std::uint64_t seed = 20240611;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_passed() const noexcept;
};

[[nodiscard]] VerifyReport run_verify(const VerifyConfig& config);

// Individual checks, usable on their own. `draws` counts random parameter sets.
[[nodiscard]] CheckResult check_identity_recursion_sum(int draws, std::uint64_t seed);
[[nodiscard]] CheckResult check_identity_diagonal_split(int draws, std::uint64_t seed);
[[nodiscard]] CheckResult check_jacobi_ode(std::uint64_t seed);
[[nodiscard]] CheckResult check_jacobi_hypergeometric(std::uint64_t seed);
[[nodiscard]] CheckResult check_jacobi_derivative(std::uint64_t seed);
[[nodiscard]] CheckResult check_jacobi_orthogonality();
[[nodiscard]] CheckResult check_jacobi_norm_forms(std::uint64_t seed);
[[nodiscard]] CheckResult check_wilson_dual_path(int draws, std::uint64_t seed);
[[nodiscard]] CheckResult check_exchange_map(const PotentialSpec& family_b_spec, int N);
[[nodiscard]] CheckResult check_numerov(const PotentialSpec& spec, bool quick);
[[nodiscard]] CheckResult check_level_count(const PotentialSpec& spec, int N, std::optional<double> free_param);
[[nodiscard]] CheckResult check_phase_conjugation(const PotentialSpec& spec, std::uint64_t seed);

}  // namespace tra
