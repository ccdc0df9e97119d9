#include "tra/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tra/error.hpp"

namespace tra {

namespace {

constexpr double kRescaleAbove = 1.0e200;

// Outermost r where V(r) < E, or nullopt when E lies below the potential everywhere.
std::optional<double> outer_turning_point(const PotentialSpec& spec, double E, double r_min) {
  const double r_far = 200.0 / spec.lambda;
  const double step = 1.0e-3;
  std::optional<double> found;
  for (double t = std::log(r_min); t <= std::log(r_far); t += step) {
    const double r = std::exp(t);
    if (potential_value(spec, r) < E) {
      found = r;
    }
  }
  return found;
}

// Lower bound on the ground state: V(r) + 1/(8 r^2) bounds the Hamiltonian from below.
double energy_floor(const PotentialSpec& spec, double r_min) {
  double lo = std::numeric_limits<double>::infinity();
  const double r_far = 200.0 / spec.lambda;
  for (double t = std::log(r_min); t <= std::log(r_far); t += 1.0e-3) {
    const double r = std::exp(t);
    lo = std::min(lo, potential_value(spec, r) + 0.125 / (r * r));
  }
  return lo;
}

struct Pair {
  double at_m = 0.0;
  double at_m1 = 0.0;
};

}  // namespace

void ShootingConfig::validate(const PotentialSpec& spec) const {
  spec.validate();
  if (!(r_min > 0.0) || !(h > 0.0) || !(tail_factor > 0.0)) {
    throw ConstraintError("shooting: r_min, h and tail_factor must be positive");
  }
  if (r_max && !(*r_max > r_min)) {
    throw ConstraintError("shooting: r_max must exceed r_min");
  }
  if (energy_bracket && !(energy_bracket->first < energy_bracket->second && energy_bracket->second < 0.0)) {
    throw ConstraintError("shooting: energy bracket must be an increasing pair of negative values");
  }
  if (scan_points < 2 || max_bisections < 1 || !(eps_tolerance > 0.0)) {
    throw ConstraintError("shooting: scan_points >= 2, max_bisections >= 1, eps_tolerance > 0 required");
  }
}

double origin_exponent(const PotentialSpec& spec) {
  const double l2 = spec.lambda * spec.lambda;
  // near r = 0 the potential behaves as g / r^2 with g = V0 (A) or V0 - 2 V- (B)
  const double g = spec.family == Family::A ? spec.v0 : spec.v0 - 2.0 * spec.vs;
  const double s2 = 0.25 + 2.0 * g / l2;
  if (s2 < 0.0) {
    throw ConstraintError("shooting: inverse-square coupling below the critical value");
  }
  return std::sqrt(s2);
}

double numerov_mismatch(const PotentialSpec& spec, double E, const ShootingConfig& cfg) {
  if (!(E < 0.0)) {
    throw DomainError("numerov_mismatch: bound states need E < 0");
  }
  const double kappa = std::sqrt(-2.0 * E);
  const std::optional<double> turn = outer_turning_point(spec, E, cfg.r_min);
  const double r_turn = turn.value_or(1.0 / spec.lambda);
  const double r_max = cfg.r_max ? *cfg.r_max : std::max(r_turn, cfg.r_min) + cfg.tail_factor / kappa;
  if (!(r_max > cfg.r_min)) {
    throw ConstraintError("numerov_mismatch: r_max must exceed r_min");
  }

  const double t0 = std::log(cfg.r_min);
  const double t1 = std::log(r_max);
  const auto n = static_cast<std::size_t>(std::max(8.0, std::ceil((t1 - t0) / cfg.h)));
  const double h = (t1 - t0) / static_cast<double>(n);
  const double h2 = h * h;

  std::vector<double> r(n + 1), q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    r[i] = std::exp(t0 + h * static_cast<double>(i));
    q[i] = 2.0 * (potential_value(spec, r[i]) - E) * r[i] * r[i] + 0.25;
  }
  auto weight = [&](std::size_t i) { return 1.0 - h2 * q[i] / 12.0; };

  std::size_t m = n / 2;
  if (turn) {
    m = static_cast<std::size_t>(std::lround((std::log(r_turn) - t0) / h));
  }
  m = std::clamp<std::size_t>(m, 2, n - 3);

  const double s = origin_exponent(spec);
  // outward: u = r^s near the origin
  Pair out;
  {
    double y_prev = weight(0) * 1.0;
    double y_cur = weight(1) * std::exp(s * h);
    for (std::size_t i = 1; i <= m; ++i) {
      const double y_next = 2.0 * y_cur - y_prev + h2 * q[i] * y_cur / weight(i);
      y_prev = y_cur;
      y_cur = y_next;
      if (std::abs(y_cur) > kRescaleAbove) {
        y_prev /= kRescaleAbove;
        y_cur /= kRescaleAbove;
      }
    }
    // y_prev = y_m, y_cur = y_{m+1}
    out = {y_prev, y_cur};
  }
  // inward: psi ~ exp(-kappa r), u = psi / sqrt(r), scaled by exp(kappa r_n)
  Pair in;
  {
    double y_prev = weight(n) / std::sqrt(r[n]);
    double y_cur = weight(n - 1) * std::exp(-kappa * (r[n - 1] - r[n])) / std::sqrt(r[n - 1]);
    for (std::size_t i = n - 1; i > m; --i) {
      const double y_next = 2.0 * y_cur - y_prev + h2 * q[i] * y_cur / weight(i);
      y_prev = y_cur;
      y_cur = y_next;
      if (std::abs(y_cur) > kRescaleAbove) {
        y_prev /= kRescaleAbove;
        y_cur /= kRescaleAbove;
      }
    }
    // y_cur = y_m, y_prev = y_{m+1}
    in = {y_cur, y_prev};
  }
  const double no = std::hypot(out.at_m, out.at_m1);
  const double ni = std::hypot(in.at_m, in.at_m1);
  if (!std::isfinite(no) || !std::isfinite(ni) || no == 0.0 || ni == 0.0) {
    throw NumericalError("numerov_mismatch: solution overflowed or vanished at E = " + std::to_string(E));
  }
  return (out.at_m * in.at_m1 - out.at_m1 * in.at_m) / (no * ni);
}

ShootResult shoot_spectrum(const PotentialSpec& spec, const ShootingConfig& cfg, int expected_levels) {
  cfg.validate(spec);
  const double l2 = spec.lambda * spec.lambda;
  double e_lo = 0.0;
  double e_hi = 0.0;
  if (cfg.energy_bracket) {
    e_lo = cfg.energy_bracket->first;
    e_hi = cfg.energy_bracket->second;
  } else {
    e_hi = -0.5e-3 * l2;
    e_lo = std::min(energy_floor(spec, cfg.r_min), e_hi) * 1.05 - 1.0e-3 * l2;
  }
  ShootResult out;
  if (!(e_lo < e_hi)) {
    out.warnings.emplace_back("empty energy bracket: the potential has no well below the bracket top");
  } else {
    // kappa = sqrt(-2E), ascending kappa is descending E
    const double k_lo = std::sqrt(-2.0 * e_hi);
    const double k_hi = std::sqrt(-2.0 * e_lo);
    auto energy = [](double k) { return -0.5 * k * k; };
    auto f = [&](double k) { return numerov_mismatch(spec, energy(k), cfg); };
    double kp = k_lo;
    double fp = f(kp);
    for (int j = 1; j < cfg.scan_points; ++j) {
      const double kc = k_lo + (k_hi - k_lo) * j / (cfg.scan_points - 1);
      const double fc = f(kc);
      if (fc == 0.0) {
        out.energies.push_back(energy(kc));
      } else if (fp != 0.0 && (fp < 0.0) != (fc < 0.0)) {
        double a = kp;
        double b = kc;
        double fa = fp;
        for (int it = 0; it < cfg.max_bisections; ++it) {
          const double mid = 0.5 * (a + b);
          // |d eps| = |d(E)| * 2 / l^2 = k |dk| * 2 / l^2
          if (2.0 * std::abs(energy(a) - energy(b)) / l2 <= cfg.eps_tolerance || mid <= a || mid >= b) {
            break;
          }
          const double fm = f(mid);
          if (fm == 0.0) {
            a = b = mid;
            break;
          }
          if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        out.energies.push_back(energy(0.5 * (a + b)));
      }
      kp = kc;
      fp = fc;
    }
  }
  std::sort(out.energies.begin(), out.energies.end());
  for (double E : out.energies) {
    out.eps.push_back(2.0 * E / l2);
  }
  if (static_cast<int>(out.energies.size()) < expected_levels) {
    out.warnings.push_back("missed level(s): found " + std::to_string(out.energies.size()) + ", expected " +
                           std::to_string(expected_levels));
  }
  return out;
}

}  // namespace tra
