#include "tra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tra/error.hpp"
#include "tra/format.hpp"

namespace tra {

ExactSpectrum exact_spectrum(const TraParams& p, ZBranch branch) {
  ExactSpectrum out;
  const TraParams pa = p.family == Family::A ? p : map_b_to_a(p);
  const double disc = pa.mu * pa.mu - 2.0 * pa.A;
  if (disc < 0.0) {
    return out;
  }
  const double z = 0.5 * z_sign(p, branch) * std::sqrt(disc);
  const double bound = z - 0.5 * (pa.mu + 1.0);  // k_max = floor(bound)
  if (bound < 0.0) {
    return out;
  }
  out.k_max = static_cast<int>(std::floor(bound));
  for (int k = 0; k <= out.k_max; ++k) {
    const double s = z - k - 0.5 * (pa.mu + 1.0);
    out.eps.push_back(-s * s);
  }
  return out;
}

PotentialSpec equivalent_family_a(const PotentialSpec& spec) {
  if (spec.family == Family::A) {
    return spec;
  }
  PotentialSpec a = spec;
  a.family = Family::A;
  a.v0 = spec.v0 - 2.0 * spec.vs;
  a.vs = -spec.vs;
  return a;
}

ExactSpectrum exact_spectrum(const PotentialSpec& spec) {
  const PotentialSpec a = equivalent_family_a(spec);
  a.validate();
  TraParams p;
  p.family = Family::A;
  p.mu = std::sqrt(0.25 + a.u0());
  p.A = a.us();
  return exact_spectrum(p, ZBranch::Positive);
}

SpectrumResult numeric_spectrum(const PotentialSpec& spec, int N, std::optional<double> free_param,
                                RootChoice root) {
  const TraParams p = derive_params(spec, N, free_param, root);
  const Pencil pencil = build_matrices(p);
  const GeneralizedEigResult eig = generalized_eig(pencil.T, pencil.R, false);

  SpectrumResult out;
  const ExactSpectrum ex = exact_spectrum(spec);
  out.exact = ex.eps;
  out.k_max = ex.k_max;
  out.N_used = N;
  out.nu_used = spec.family == Family::A ? p.nu : p.mu;
  out.method = eig.method;
  out.condition_diag = eig.condition_diag;
  std::vector<double> bound;
  for (double e : eig.eigenvalues) {
    if (e < 0.0) {
      bound.push_back(e);
    }
  }
  out.numeric = refine_extended(build_matrices_extended(p), bound);
  const std::size_t common = std::min(out.numeric.size(), out.exact.size());
  for (std::size_t k = 0; k < common; ++k) {
    out.per_level_abs_diff.push_back(std::abs(out.numeric[k] - out.exact[k]));
  }
  return out;
}

ConvergenceTable convergence_table(const PotentialSpec& spec, const std::vector<int>& N_list,
                                   const NuPolicy& policy) {
  ConvergenceTable t;
  t.spec = spec;
  t.N_list = N_list;
  t.exact = exact_spectrum(spec);
  for (int N : N_list) {
    std::optional<double> free;
    if (policy.kind == NuPolicy::Kind::Explicit) {
      free = policy.value;
    }
    t.runs.push_back(numeric_spectrum(spec, N, free, policy.root));
  }
  return t;
}

bool ConvergenceTable::monotone(int level, double slack) const {
  const auto k = static_cast<std::size_t>(level);
  double previous = INFINITY;
  for (const SpectrumResult& r : runs) {
    if (r.per_level_abs_diff.size() <= k) {
      return false;
    }
    const double d = r.per_level_abs_diff[k];
    if (d > previous + slack) {
      return false;
    }
    previous = d;
  }
  return true;
}

namespace {

std::size_t row_count(const ConvergenceTable& t) {
  std::size_t rows = t.exact.eps.size();
  for (const SpectrumResult& r : t.runs) {
    rows = std::max(rows, r.numeric.size());
  }
  return rows;
}

double shown(double eps, bool table_units) { return table_units ? -eps : eps; }

}  // namespace

std::string ConvergenceTable::to_csv(bool table_units) const {
  std::ostringstream os;
  os << "level";
  for (int N : N_list) {
    os << ",N=" << N;
  }
  os << ",exact\n";
  for (std::size_t k = 0; k < row_count(*this); ++k) {
    os << k;
    for (const SpectrumResult& r : runs) {
      os << ',';
      if (k < r.numeric.size()) {
        os << format_number(shown(r.numeric[k], table_units));
      }
    }
    os << ',';
    if (k < exact.eps.size()) {
      os << format_number(shown(exact.eps[k], table_units));
    }
    os << '\n';
  }
  return os.str();
}

std::string ConvergenceTable::to_text(bool table_units) const {
  std::ostringstream os;
  const int width = 17;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 1, ' ') << s;
  };
  os << (table_units ? "energies in units of -lambda^2/2\n" : "dimensionless eps = 2E/lambda^2\n");
  os << "  n";
  for (int N : N_list) {
    cell("N=" + std::to_string(N));
  }
  cell("exact");
  os << '\n';
  for (std::size_t k = 0; k < row_count(*this); ++k) {
    const std::string label = std::to_string(k);
    os << std::string(3 - std::min<std::size_t>(label.size(), 2), ' ') << label;
    for (const SpectrumResult& r : runs) {
      cell(k < r.numeric.size() ? format_fixed(shown(r.numeric[k], table_units), 12) : "-");
    }
    cell(k < exact.eps.size() ? format_fixed(shown(exact.eps[k], table_units), 12) : "-");
    os << '\n';
  }
  return os.str();
}

}  // namespace tra
