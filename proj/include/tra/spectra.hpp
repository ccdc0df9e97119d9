#pragma once

// Closed-form and matrix bound-state spectra and the convergence comparison across N.

#include <optional>
#include <string>
#include <vector>

#include "tra/eigensolver.hpp"
#include "tra/potential.hpp"
#include "tra/tra_core.hpp"
#include "tra/wilson.hpp"

namespace tra {

struct ExactSpectrum {
  std::vector<double> eps;  // deepest first
  int k_max = -1;
};

/// eps_k = -(k + (mu+1)/2 - z)^2 for k = 0..k_max, computed from the (mapped) family-A
/// parameters with the selected branch of z. Empty when no level exists.
[[nodiscard]] ExactSpectrum exact_spectrum(const TraParams& p, ZBranch branch = ZBranch::Auto);

/// Exact spectrum straight from the potential. Family B is rewritten as the family-A
/// potential it equals (V0 - 2V-, V+ = -V-), which needs no basis and no branch choice.
[[nodiscard]] ExactSpectrum exact_spectrum(const PotentialSpec& spec);

/// The family-A potential identical to a family-B one; family-A input is returned as is.
[[nodiscard]] PotentialSpec equivalent_family_a(const PotentialSpec& spec);

struct SpectrumResult {
  std::vector<double> exact;    // eps, deepest first
  std::vector<double> numeric;  // negative generalized eigenvalues, ascending
  int k_max = -1;
  int N_used = 0;
  double nu_used = 0.0;  // the free basis parameter (mu for family B)
  /// |numeric_k - exact_k| for every level present in both lists.
  std::vector<double> per_level_abs_diff;
  EigMethod method = EigMethod::CongruenceReduction;
  double condition_diag = 1.0;
};

[[nodiscard]] SpectrumResult numeric_spectrum(const PotentialSpec& spec, int N,
                                              std::optional<double> free_param = std::nullopt,
                                              RootChoice root = RootChoice::Negative);

/// How the free basis parameter is chosen per N.
struct NuPolicy {
  enum class Kind { PlateauMidpoint, Explicit };
  Kind kind = Kind::PlateauMidpoint;
  double value = 0.0;
  RootChoice root = RootChoice::Negative;  // family B only
};

struct ConvergenceTable {
  PotentialSpec spec;
  std::vector<int> N_list;
  std::vector<SpectrumResult> runs;  // one per N
  ExactSpectrum exact;

  /// Energies in the table are printed as -eps (units -lambda^2/2) when true, else as eps.
  [[nodiscard]] std::string to_csv(bool table_units = true) const;
  [[nodiscard]] std::string to_text(bool table_units = true) const;
  /// |numeric - exact| per level across N is non-increasing up to the slack.
  [[nodiscard]] bool monotone(int level, double slack = 1.0e-13) const;
};

[[nodiscard]] ConvergenceTable convergence_table(const PotentialSpec& spec,
                                                 const std::vector<int>& N_list,
                                                 const NuPolicy& policy = {});

}  // namespace tra
