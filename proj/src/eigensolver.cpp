#include "tra/eigensolver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tra/error.hpp"
#include "tra/format.hpp"

namespace tra {

namespace {

void check_shapes(const SymTridiagonal& T, const SymTridiagonal& R) {
  if (T.size() == 0 || T.size() != R.size()) {
    throw DomainError("generalized_eig: T and R must be non-empty and of equal size");
  }
  if (T.offdiag.size() + 1 != T.size() || R.offdiag.size() + 1 != R.size()) {
    throw DomainError("generalized_eig: malformed tridiagonal matrix");
  }
}

Eigen::VectorXd tridiagonal_eigenvalues(const SymTridiagonal& M) {
  const auto n = static_cast<Eigen::Index>(M.size());
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(M.diag.data(), n);
  Eigen::VectorXd e(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    e(i) = M.offdiag[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// Lower bidiagonal Cholesky factor: diagonal l, subdiagonal m. Empty on failure.
struct Bidiagonal {
  std::vector<double> l;
  std::vector<double> m;
};

std::optional<Bidiagonal> tridiagonal_cholesky(const SymTridiagonal& R) {
  const std::size_t n = R.size();
  Bidiagonal out;
  out.l.resize(n);
  out.m.resize(n > 0 ? n - 1 : 0);
  double pivot = R.diag[0];
  for (std::size_t i = 0;; ++i) {
    if (!(pivot > 0.0)) {
      return std::nullopt;
    }
    out.l[i] = std::sqrt(pivot);
    if (i + 1 == n) {
      break;
    }
    out.m[i] = R.offdiag[i] / out.l[i];
    pivot = R.diag[i + 1] - out.m[i] * out.m[i];
  }
  return out;
}

Eigen::MatrixXd dense(const SymTridiagonal& M) {
  const auto n = static_cast<Eigen::Index>(M.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = M.diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      out(i, i + 1) = out(i + 1, i) = M.offdiag[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

// y = L^{-1} x, in place
void forward_solve(const Bidiagonal& L, Eigen::Ref<Eigen::VectorXd> x) {
  x(0) /= L.l[0];
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    x(i) = (x(i) - L.m[k - 1] * x(i - 1)) / L.l[k];
  }
}

// y = L^{-T} x, in place
void backward_solve(const Bidiagonal& L, Eigen::Ref<Eigen::VectorXd> x) {
  const Eigen::Index n = x.size();
  x(n - 1) /= L.l[static_cast<std::size_t>(n - 1)];
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    x(i) = (x(i) - L.m[k] * x(i + 1)) / L.l[k];
  }
}

void fix_sign(std::vector<double>& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (std::abs(f[i]) > std::abs(f[best])) {
      best = i;
    }
  }
  if (f[best] < 0.0) {
    for (double& v : f) {
      v = -v;
    }
  }
}

double quadratic_form(const SymTridiagonal& R, const std::vector<double>& f) {
  const std::vector<double> rf = R.multiply(f);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += f[i] * rf[i];
  }
  return s;
}

// Pivots of LDL^T for T - sigma R, with exact zeros nudged to keep the recurrence going.
template <typename Visit>
void ldlt_pivots(const SymTridiagonal& T, const SymTridiagonal& R, double sigma, Visit visit) {
  const std::size_t n = T.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double d = T.diag[0] - sigma * R.diag[0];
  for (std::size_t i = 0;; ++i) {
    visit(d);
    if (i + 1 == n) {
      break;
    }
    if (d == 0.0) {
      d = tiny;
    }
    const double b = T.offdiag[i] - sigma * R.offdiag[i];
    d = T.diag[i + 1] - sigma * R.diag[i + 1] - b * b / d;
  }
}

std::vector<double> inverse_iteration(const SymTridiagonal& T, const SymTridiagonal& R, double eps) {
  const Eigen::MatrixXd Td = dense(T);
  const Eigen::MatrixXd Rd = dense(R);
  const double scale = T.norm_inf() + std::abs(eps) * R.norm_inf();
  const double shift = eps + 1.0e-10 * std::max(scale, 1.0) / std::max(R.norm_inf(), 1.0e-300);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(Td - shift * Rd);
  const auto n = static_cast<Eigen::Index>(T.size());
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) += 0.1 * std::sin(1.0 + static_cast<double>(i));  // avoid an orthogonal start
  }
  for (int it = 0; it < 4; ++it) {
    x = lu.solve(Rd * x);
    const double nrm = x.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
      throw NumericalError("inverse iteration broke down at eps = " + format_number(eps));
    }
    x /= nrm;
  }
  std::vector<double> f(x.data(), x.data() + n);
  const double q = std::abs(quadratic_form(R, f));
  if (q > 0.0) {
    const double inv = 1.0 / std::sqrt(q);
    for (double& v : f) {
      v *= inv;
    }
  }
  fix_sign(f);
  return f;
}

// Shrinks [lo, hi] around eigenvalue j (count(lo) <= j < count(hi)) as far as doubles allow.
double bisect_index(const SymTridiagonal& T, const SymTridiagonal& R, std::size_t j, double lo, double hi) {
  for (int it = 0; it < 2200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (inertia_count(T, R, mid) > static_cast<int>(j)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Polishes eigenvalue estimates in place; returns the largest shift applied.
double refine_eigenvalues(const SymTridiagonal& T, const SymTridiagonal& R, std::vector<double>& values,
                          double scale) {
  double shift = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double v = values[j];
    double delta = 1.0e-10 * (std::abs(v) + scale);
    for (int widen = 0; widen < 8; ++widen, delta *= 100.0) {
      const double lo = v - delta;
      const double hi = v + delta;
      if (inertia_count(T, R, lo) <= static_cast<int>(j) && inertia_count(T, R, hi) > static_cast<int>(j)) {
        values[j] = bisect_index(T, R, j, lo, hi);
        shift = std::max(shift, std::abs(values[j] - v));
        break;
      }
    }
  }
  return shift;
}

// Bisection on the inertia count; R must be positive definite.
std::vector<double> bisection_eigenvalues(const SymTridiagonal& T, const SymTridiagonal& R,
                                          double r_min) {
  const std::size_t n = T.size();
  const double bound = 1.01 * T.norm_inf() / r_min + 1.0;
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = bisect_index(T, R, j, -bound, bound);
  }
  return out;
}

std::vector<double> determinant_scan(const SymTridiagonal& T, const SymTridiagonal& R,
                                     double r_min_abs, int points) {
  const double bound = 1.01 * T.norm_inf() / r_min_abs + 1.0;
  std::vector<double> roots;
  double prev_x = -bound;
  int prev_s = determinant_sign(T, R, prev_x);
  for (int i = 1; i <= points; ++i) {
    const double x = -bound + 2.0 * bound * i / points;
    const int s = determinant_sign(T, R, x);
    if (s == 0) {
      roots.push_back(x);
    } else if (prev_s != 0 && s != prev_s) {
      double lo = prev_x;
      double hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
          break;
        }
        if (determinant_sign(T, R, mid) == prev_s) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_s = s;
  }
  return roots;
}

}  // namespace

std::string_view to_string(EigMethod m) noexcept {
  return m == EigMethod::CongruenceReduction ? "congruence-reduction" : "determinant-bisection";
}

int inertia_count(const SymTridiagonal& T, const SymTridiagonal& R, double sigma) {
  check_shapes(T, R);
  int count = 0;
  ldlt_pivots(T, R, sigma, [&](double d) { count += d < 0.0 ? 1 : 0; });
  return count;
}

int determinant_sign(const SymTridiagonal& T, const SymTridiagonal& R, double sigma) {
  check_shapes(T, R);
  int sign = 1;
  ldlt_pivots(T, R, sigma, [&](double d) {
    if (d == 0.0) {
      sign = 0;
    } else if (d < 0.0) {
      sign = -sign;
    }
  });
  return sign;
}

double backward_error(const SymTridiagonal& T, const SymTridiagonal& R, double eps,
                      const std::vector<double>& f) {
  const std::vector<double> tf = T.multiply(f);
  const std::vector<double> rf = R.multiply(f);
  double res = 0.0;
  double fn = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    res = std::max(res, std::abs(tf[i] - eps * rf[i]));
    fn = std::max(fn, std::abs(f[i]));
  }
  const double denom = (T.norm_inf() + std::abs(eps) * R.norm_inf()) * fn;
  return denom > 0.0 ? res / denom : res;
}

int inertia_count_extended(const ExtendedPencil& P, long double sigma) {
  const std::size_t n = P.t_diag.size();
  if (n == 0 || P.r_diag.size() != n || P.t_off.size() + 1 != n || P.r_off.size() + 1 != n) {
    throw DomainError("inertia_count_extended: malformed pencil");
  }
  const long double tiny = std::numeric_limits<long double>::min() / std::numeric_limits<long double>::epsilon();
  int count = 0;
  long double d = P.t_diag[0] - sigma * P.r_diag[0];
  for (std::size_t i = 0;; ++i) {
    count += d < 0 ? 1 : 0;
    if (i + 1 == n) {
      break;
    }
    if (d == 0) {
      d = tiny;
    }
    const long double b = P.t_off[i] - sigma * P.r_off[i];
    d = P.t_diag[i + 1] - sigma * P.r_diag[i + 1] - b * b / d;
  }
  return count;
}

std::vector<double> refine_extended(const ExtendedPencil& P, const std::vector<double>& estimates) {
  const std::size_t n = P.t_diag.size();
  // R sign from its first pivot; a negative definite R reverses the eigenvalue count
  const bool negated = P.r_diag.empty() ? false : P.r_diag[0] < 0;
  auto below = [&](long double sigma) {
    const int c = inertia_count_extended(P, sigma);
    return negated ? static_cast<int>(n) - c : c;
  };
  std::vector<double> sorted(estimates);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() > n) {
    throw DomainError("refine_extended: more estimates than eigenvalues");
  }
  std::vector<double> out(sorted);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const long double v = sorted[j];
    long double delta = 1.0e-9L * (std::fabs(v) + 1);
    for (int widen = 0; widen < 6; ++widen, delta *= 100) {
      long double lo = v - delta;
      long double hi = v + delta;
      const int c_lo = below(lo);
      const int c_hi = below(hi);
      if (c_hi != c_lo + 1) {
        continue;
      }
      for (int it = 0; it < 400; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (mid <= lo || mid >= hi) {
          break;
        }
        if (below(mid) > c_lo) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      out[j] = static_cast<double>(0.5L * (lo + hi));
      break;
    }
  }
  return out;
}

double min_eigenvalue(const SymTridiagonal& M) { return tridiagonal_eigenvalues(M)(0); }

GeneralizedEigResult generalized_eig(const SymTridiagonal& T, const SymTridiagonal& R,
                                     bool want_vectors) {
  EigOptions o;
  o.want_vectors = want_vectors;
  return generalized_eig(T, R, o);
}

GeneralizedEigResult generalized_eig(const SymTridiagonal& T_in, const SymTridiagonal& R_in,
                                     const EigOptions& options) {
  check_shapes(T_in, R_in);
  GeneralizedEigResult out;

  const Eigen::VectorXd r_eigs = tridiagonal_eigenvalues(R_in);
  const double r_lo = r_eigs(0);
  const double r_hi = r_eigs(r_eigs.size() - 1);
  const double r_min_abs = r_eigs.cwiseAbs().minCoeff();
  if (r_min_abs == 0.0) {
    throw NumericalError("generalized_eig: R is singular");
  }
  out.condition_diag = r_eigs.cwiseAbs().maxCoeff() / r_min_abs;

  SymTridiagonal T = T_in;
  SymTridiagonal R = R_in;
  if (r_hi < 0.0) {
    T = T_in.negated();
    R = R_in.negated();
    out.pencil_negated = true;
  } else if (r_lo <= 0.0) {
    out.r_indefinite = true;
  }

  std::optional<Bidiagonal> L;
  if (!out.r_indefinite) {
    L = tridiagonal_cholesky(R);
    if (!L) {
      out.r_indefinite = true;  // numerically not definite
    }
  }

  if (out.r_indefinite) {
    out.method = EigMethod::DeterminantBisection;
    out.eigenvalues = determinant_scan(T, R, r_min_abs, options.indefinite_scan_points);
  } else if (options.force_bisection || out.condition_diag > options.condition_limit) {
    out.method = EigMethod::DeterminantBisection;
    out.eigenvalues = bisection_eigenvalues(T, R, r_min_abs);
  } else {
    out.method = EigMethod::CongruenceReduction;
    const auto n = static_cast<Eigen::Index>(T.size());
    // C = L^{-1} T L^{-T}
    Eigen::MatrixXd C = dense(T);
    for (Eigen::Index j = 0; j < n; ++j) {
      forward_solve(*L, C.col(j));
    }
    C.transposeInPlace();
    for (Eigen::Index j = 0; j < n; ++j) {
      forward_solve(*L, C.col(j));
    }
    C = 0.5 * (C + C.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        C, options.want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw NumericalError("generalized_eig: symmetric eigensolver did not converge");
    }
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    if (options.refine) {
      const double scale = T.norm_inf() / r_min_abs;
      out.sturm_discrepancy = refine_eigenvalues(T, R, out.eigenvalues, scale) / scale;
    }
    if (options.want_vectors) {
      std::vector<std::vector<double>> vecs;
      vecs.reserve(static_cast<std::size_t>(n));
      for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXd y = es.eigenvectors().col(j);
        backward_solve(*L, y);
        std::vector<double> f(y.data(), y.data() + n);
        fix_sign(f);
        vecs.push_back(std::move(f));
      }
      out.eigenvectors = std::move(vecs);
    }
    return out;
  }

  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  if (options.want_vectors) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(out.eigenvalues.size());
    for (double e : out.eigenvalues) {
      vecs.push_back(inverse_iteration(T, R, e));
    }
    out.eigenvectors = std::move(vecs);
  }
  return out;
}

PlateauReport plateau_scan(const PotentialSpec& spec, int N, const std::vector<double>& grid,
                           const PlateauOptions& options) {
  PlateauReport report;
  report.grid = grid;
  std::size_t max_levels = 0;
  for (double value : grid) {
    const TraParams p = derive_params(spec, N, value, options.root);
    Pencil pencil;
    try {
      pencil = build_matrices(p);
    } catch (const PoleError&) {
      // a grid point on a pole of the recursion; leave it empty so it breaks any run
      report.warnings.push_back("grid point " + format_number(value) + " sits on a pole of the recursion, skipped");
      report.bound_levels.emplace_back();
      continue;
    }
    const GeneralizedEigResult r = generalized_eig(pencil.T, pencil.R, false);
    std::vector<double> bound;
    for (double e : r.eigenvalues) {
      if (e < 0.0) {
        bound.push_back(e);
      }
    }
    max_levels = std::max(max_levels, bound.size());
    report.bound_levels.push_back(std::move(bound));
  }

  for (std::size_t level = 0; level < max_levels; ++level) {
    PlateauLevel pl;
    pl.level = static_cast<int>(level);
    std::size_t best_begin = 0;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (report.bound_levels[i].size() <= level) {
        continue;
      }
      double lo = report.bound_levels[i][level];
      double hi = lo;
      std::size_t j = i;
      while (j + 1 < grid.size() && report.bound_levels[j + 1].size() > level) {
        const double v = report.bound_levels[j + 1][level];
        const double nlo = std::min(lo, v);
        const double nhi = std::max(hi, v);
        if (nhi - nlo > options.tolerance * std::max(std::abs(nlo), std::abs(nhi))) {
          break;
        }
        lo = nlo;
        hi = nhi;
        ++j;
      }
      if (j - i + 1 > best_len) {
        best_len = j - i + 1;
        best_begin = i;
      }
    }
    pl.points = best_len;
    if (best_len >= options.min_points && best_len > 0) {
      pl.found = true;
      pl.begin = best_begin;
      pl.end = best_begin + best_len - 1;
      pl.free_lo = grid[pl.begin];
      pl.free_hi = grid[pl.end];
      pl.free_mid = 0.5 * (pl.free_lo + pl.free_hi);
      pl.value = report.bound_levels[(pl.begin + pl.end) / 2][level];
    } else {
      report.warnings.push_back("no plateau for level " + std::to_string(level) + ": longest stable run has " +
                                std::to_string(best_len) + " grid point(s), need " +
                                std::to_string(options.min_points));
    }
    report.levels.push_back(pl);
  }
  if (max_levels == 0) {
    report.warnings.emplace_back("no bound eigenvalue at any grid point");
  }
  return report;
}

}  // namespace tra
