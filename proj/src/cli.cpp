#include "tra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tra/eigensolver.hpp"
#include "tra/error.hpp"
#include "tra/format.hpp"
#include "tra/potential.hpp"
#include "tra/scattering.hpp"
#include "tra/spectra.hpp"
#include "tra/tra_core.hpp"
#include "tra/verify.hpp"
#include "tra/wavefunction.hpp"
#include "tra/wilson.hpp"

namespace tra {

namespace {

using nlohmann::json;

enum class Units { HalfLambda2, Dimensionless };
enum class Format { Csv, Text };

// Raw values from the command line; unset means "not given".
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> family;
  std::optional<double> v0, vplus, vminus, vs, lambda;
  std::optional<std::string> units;
  std::optional<std::string> n_list;
  std::optional<double> nu;
  std::optional<std::string> out, json_out, format;
  // phase-shift
  std::optional<double> eps_min, eps_max;
  std::optional<int> points;
  bool unwrap = false;
  std::optional<std::string> z_branch;
  std::optional<std::string> nu_root;
  // wavefunction
  std::optional<std::string> levels;
  std::optional<double> r_end;
  bool normalize = false;
  // verify
  bool quick = false;
  std::optional<std::uint64_t> seed;
  // scan-plateau
  std::optional<double> nu_min, nu_max, tol;
};

struct RunConfig {
  PotentialSpec spec;
  Units units = Units::HalfLambda2;
  Format format = Format::Csv;
  std::vector<int> N_list{10, 30, 50, 100};
  std::optional<double> nu;
  std::string out = "-";
  std::optional<std::string> json_out;
  double eps_min = 0.01, eps_max = 50.0;
  std::optional<int> points;
  bool unwrap = false;
  ZBranch branch = ZBranch::Auto;
  RootChoice root = RootChoice::Negative;
  std::optional<std::vector<int>> levels;
  double r_end = 6.0;
  bool normalize = false;
  bool quick = false;
  std::uint64_t seed = 20240611;
  std::optional<double> nu_min, nu_max;
  double tol = 1.0e-9;
};

// Error list collected while resolving the configuration.
class Problems {
 public:
  void add(std::string msg) { items_.push_back(std::move(msg)); }
  [[nodiscard]] bool empty() const { return items_.empty(); }
  void report(std::ostream& err) const {
    err << "configuration error" << (items_.size() > 1 ? "s" : "") << ":\n";
    for (const std::string& s : items_) {
      err << "  - " << s << '\n';
    }
  }

 private:
  std::vector<std::string> items_;
};

// Rounded to 15 significant digits so JSON and CSV carry the same values.
json num(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return std::stod(format_number(x));
}

std::vector<int> parse_int_list(const std::string& text, const char* what, Problems& problems) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      out.push_back(v);
    } catch (const std::exception&) {
      problems.add(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) {
    problems.add(std::string(what) + ": empty list");
  }
  return out;
}

template <class T>
std::optional<T> json_get(const json& j, const char* key, Problems& problems) {
  if (!j.contains(key)) {
    return std::nullopt;
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    problems.add(std::string("config file: key '") + key + "' has the wrong type");
    return std::nullopt;
  }
}

// "N" may be a number, a list, or a comma-separated string in the file.
std::optional<std::string> json_int_list(const json& j, const char* key, Problems& problems) {
  if (!j.contains(key)) {
    return std::nullopt;
  }
  const json& v = j.at(key);
  if (v.is_number_integer()) {
    return std::to_string(v.get<int>());
  }
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_array()) {
    std::string s;
    for (const json& e : v) {
      if (!e.is_number_integer()) {
        problems.add(std::string("config file: '") + key + "' must hold integers");
        return std::nullopt;
      }
      s += (s.empty() ? "" : ",") + std::to_string(e.get<int>());
    }
    return s;
  }
  problems.add(std::string("config file: key '") + key + "' has the wrong type");
  return std::nullopt;
}

// File values fill in whatever the command line left unset.
void merge_file(Flags& f, Problems& problems) {
  if (!f.config) {
    return;
  }
  std::ifstream in(*f.config);
  if (!in) {
    problems.add("cannot open config file '" + *f.config + "'");
    return;
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    problems.add("config file '" + *f.config + "' is not valid JSON: " + e.what());
    return;
  }
  if (!j.is_object()) {
    problems.add("config file must hold a JSON object");
    return;
  }
  static const char* const known[] = {"family", "v0",     "vplus",   "vminus", "vs",     "lambda", "units",
                                      "N",      "nu",     "out",     "json",   "format", "eps_min", "eps_max",
                                      "points", "unwrap", "z_branch", "nu_root", "levels", "r_end", "normalize", "quick",
                                      "seed",   "nu_min", "nu_max",  "tol"};
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return item.key() == k; }) ==
        std::end(known)) {
      problems.add("config file: unknown key '" + item.key() + "'");
    }
  }
  auto fill = [&](auto& slot, const char* key) {
    using T = typename std::decay_t<decltype(slot)>::value_type;
    if (!slot) {
      slot = json_get<T>(j, key, problems);
    }
  };
  fill(f.family, "family");
  fill(f.v0, "v0");
  fill(f.vplus, "vplus");
  fill(f.vminus, "vminus");
  fill(f.vs, "vs");
  fill(f.lambda, "lambda");
  fill(f.units, "units");
  fill(f.nu, "nu");
  fill(f.out, "out");
  fill(f.json_out, "json");
  fill(f.format, "format");
  fill(f.eps_min, "eps_min");
  fill(f.eps_max, "eps_max");
  fill(f.points, "points");
  fill(f.z_branch, "z_branch");
  fill(f.nu_root, "nu_root");
  fill(f.r_end, "r_end");
  fill(f.seed, "seed");
  fill(f.nu_min, "nu_min");
  fill(f.nu_max, "nu_max");
  fill(f.tol, "tol");
  if (!f.n_list) {
    f.n_list = json_int_list(j, "N", problems);
  }
  if (!f.levels) {
    f.levels = json_int_list(j, "levels", problems);
  }
  for (auto [slot, key] : {std::pair<bool*, const char*>{&f.unwrap, "unwrap"},
                           {&f.normalize, "normalize"},
                           {&f.quick, "quick"}}) {
    if (!*slot) {
      *slot = json_get<bool>(j, key, problems).value_or(false);
    }
  }
}

RunConfig resolve(Flags f, Problems& problems) {
  merge_file(f, problems);
  RunConfig c;

  Family family = Family::A;
  if (f.family) {
    try {
      family = parse_family(*f.family);
    } catch (const Error& e) {
      problems.add(e.what());
    }
  }
  if (family == Family::A && f.vminus) {
    problems.add("--vminus belongs to family B; use --vplus (or --vs) for family A");
  }
  if (family == Family::B && f.vplus) {
    problems.add("--vplus belongs to family A; use --vminus (or --vs) for family B");
  }
  const int given = (f.vplus ? 1 : 0) + (f.vminus ? 1 : 0) + (f.vs ? 1 : 0);
  if (given > 1) {
    problems.add("give the second strength once (--vplus, --vminus or --vs)");
  }
  const double vs = f.vs ? *f.vs : (f.vplus ? *f.vplus : f.vminus.value_or(0.0));
  const double lambda = f.lambda.value_or(1.0);
  c.spec = PotentialSpec::from_half_lambda2(family, f.v0.value_or(0.0), vs, lambda);
  try {
    c.spec.validate();
  } catch (const Error& e) {
    problems.add(e.what());
  }

  if (f.units) {
    if (*f.units == "half-lambda2") {
      c.units = Units::HalfLambda2;
    } else if (*f.units == "dimensionless") {
      c.units = Units::Dimensionless;
    } else {
      problems.add("--units must be half-lambda2 or dimensionless (got '" + *f.units + "')");
    }
  }
  if (f.format) {
    if (*f.format == "csv") {
      c.format = Format::Csv;
    } else if (*f.format == "text") {
      c.format = Format::Text;
    } else {
      problems.add("--format must be csv or text (got '" + *f.format + "')");
    }
  }
  if (f.n_list) {
    c.N_list = parse_int_list(*f.n_list, "--N", problems);
    for (int N : c.N_list) {
      if (N < 0) {
        problems.add("--N: basis size must be non-negative (got " + std::to_string(N) + ")");
      }
    }
  }
  c.nu = f.nu;
  c.out = f.out.value_or("-");
  c.json_out = f.json_out;
  c.eps_min = f.eps_min.value_or(c.eps_min);
  c.eps_max = f.eps_max.value_or(c.eps_max);
  c.points = f.points;
  if (c.points && *c.points < 1) {
    problems.add("--points must be positive");
  }
  c.unwrap = f.unwrap;
  if (f.z_branch) {
    if (*f.z_branch == "auto") {
      c.branch = ZBranch::Auto;
    } else if (*f.z_branch == "positive" || *f.z_branch == "+") {
      c.branch = ZBranch::Positive;
    } else if (*f.z_branch == "negative" || *f.z_branch == "-") {
      c.branch = ZBranch::Negative;
    } else {
      problems.add("--z-branch must be auto, positive or negative");
    }
  }
  if (f.nu_root) {
    if (*f.nu_root == "negative") {
      c.root = RootChoice::Negative;
    } else if (*f.nu_root == "positive") {
      c.root = RootChoice::Positive;
    } else {
      problems.add("--nu-root must be negative or positive");
    }
  }
  if (f.levels && *f.levels != "all") {
    c.levels = parse_int_list(*f.levels, "--levels", problems);
  }
  c.r_end = f.r_end.value_or(c.r_end);
  c.normalize = f.normalize;
  c.quick = f.quick;
  c.seed = f.seed.value_or(c.seed);
  c.nu_min = f.nu_min;
  c.nu_max = f.nu_max;
  c.tol = f.tol.value_or(c.tol);
  if (!(c.tol > 0.0)) {
    problems.add("--tol must be positive");
  }
  return c;
}

// Writes to a path, or to `out` for "-".
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "cannot write '" << path << "'\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

double shown_energy(double eps, Units u) { return u == Units::HalfLambda2 ? -eps : eps; }

json potential_json(const RunConfig& c) {
  const double unit = 0.5 * c.spec.lambda * c.spec.lambda;
  return {{"family", std::string(to_string(c.spec.family))},
          {"v0", num(c.spec.v0 / unit)},
          {c.spec.family == Family::A ? "vplus" : "vminus", num(c.spec.vs / unit)},
          {"lambda", num(c.spec.lambda)},
          {"units", c.units == Units::HalfLambda2 ? "half-lambda2" : "dimensionless"}};
}

std::string energy_label(Units u) {
  return u == Units::HalfLambda2 ? "-lambda^2/2" : "dimensionless eps";
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
  NuPolicy policy;
  if (c.nu) {
    policy.kind = NuPolicy::Kind::Explicit;
    policy.value = *c.nu;
  }
  policy.root = c.root;
  const ConvergenceTable table = convergence_table(c.spec, c.N_list, policy);
  const bool table_units = c.units == Units::HalfLambda2;
  std::string text;
  if (table.exact.eps.empty()) {
    bool numeric_bound = false;
    for (const SpectrumResult& r : table.runs) {
      numeric_bound = numeric_bound || !r.numeric.empty();
    }
    text = c.format == Format::Csv ? table.to_csv(table_units)
                                   : std::string("no bound states for this potential\n");
    if (numeric_bound && c.format == Format::Text) {
      text += "(the finite matrices still produced negative eigenvalues; see the CSV output)\n";
    }
  } else {
    text = c.format == Format::Csv ? table.to_csv(table_units) : table.to_text(table_units);
  }
  if (!emit(c.out, text, out, err)) {
    return kExitUsage;
  }

  if (c.json_out) {
    json j;
    j["command"] = "spectrum";
    j["potential"] = potential_json(c);
    j["energy_units"] = energy_label(c.units);
    j["k_max"] = table.exact.k_max;
    json exact = json::array();
    for (double e : table.exact.eps) {
      exact.push_back(num(shown_energy(e, c.units)));
    }
    j["exact"] = exact;
    json runs = json::array();
    for (const SpectrumResult& r : table.runs) {
      json levels = json::array();
      for (std::size_t k = 0; k < r.numeric.size(); ++k) {
        json cell = {{"level", k}, {"numeric", num(shown_energy(r.numeric[k], c.units))}};
        if (k < r.per_level_abs_diff.size()) {
          cell["abs_diff"] = num(r.per_level_abs_diff[k]);
        }
        levels.push_back(cell);
      }
      runs.push_back({{"N", r.N_used},
                      {"free_param", num(r.nu_used)},
                      {"method", std::string(to_string(r.method))},
                      {"condition_R", num(r.condition_diag)},
                      {"bound_count", r.numeric.size()},
                      {"levels", levels}});
    }
    j["runs"] = runs;
    json mono = json::array();
    for (int k = 0; k <= table.exact.k_max; ++k) {
      mono.push_back(table.monotone(k));
    }
    j["monotone"] = mono;
    if (!emit(*c.json_out, j.dump(2) + "\n", out, err)) {
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_phase_shift(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const int points = c.points.value_or(500);
  if (!(c.eps_min > 0.0) || !(c.eps_max > c.eps_min)) {
    err << "phase-shift: need 0 < --eps-min < --eps-max\n";
    return kExitUsage;
  }
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(points == 1 ? c.eps_min : c.eps_min + (c.eps_max - c.eps_min) * i / (points - 1));
  }
  const TraParams p = derive_params(c.spec, 0);
  const PhaseShiftCurve curve = phase_shift_curve(p, grid, c.unwrap, c.branch);
  const double unit = 0.5 * c.spec.lambda * c.spec.lambda;
  std::ostringstream os;
  os << "eps,E,delta_rad" << (c.unwrap ? ",delta_unwrapped" : "") << '\n';
  for (std::size_t i = 0; i < curve.energies.size(); ++i) {
    os << format_number(curve.energies[i]) << ',' << format_number(curve.energies[i] * unit) << ','
       << format_number(curve.delta[i]);
    if (c.unwrap) {
      os << ',' << format_number(curve.delta_unwrapped[i]);
    }
    os << '\n';
  }
  if (!emit(c.out, os.str(), out, err)) {
    return kExitUsage;
  }
  if (c.json_out) {
    json j = {{"command", "phase-shift"},
              {"potential", potential_json(c)},
              {"points", points},
              {"eps_min", num(c.eps_min)},
              {"eps_max", num(c.eps_max)},
              {"unwrapped", c.unwrap},
              {"z_sign", z_sign(p, c.branch)}};
    if (!emit(*c.json_out, j.dump(2) + "\n", out, err)) {
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ExactSpectrum ex = exact_spectrum(c.spec);
  if (ex.k_max < 0) {
    err << "wavefunction: this potential has no bound states\n";
    return kExitUsage;
  }
  std::vector<int> levels;
  if (c.levels) {
    levels = *c.levels;
  } else {
    for (int k = 0; k <= ex.k_max; ++k) {
      levels.push_back(k);
    }
  }
  for (int k : levels) {
    if (k < 0 || k > ex.k_max) {
      err << "wavefunction: level " << k << " outside 0.." << ex.k_max << '\n';
      return kExitUsage;
    }
  }
  WavefunctionOptions opts;
  opts.free_param = c.nu;
  opts.normalize = c.normalize;
  opts.branch = c.branch;
  const int N = *std::max_element(c.N_list.begin(), c.N_list.end());
  const std::vector<double> grid = default_radial_grid(c.r_end, c.points.value_or(2000));
  std::vector<WavefunctionSample> samples;
  for (int k : levels) {
    samples.push_back(bound_state_psi(c.spec, N, k, grid, opts));
  }
  std::ostringstream os;
  os << 'r';
  for (int k : levels) {
    os << ",psi_" << k;
  }
  os << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << format_number(grid[i]);
    for (const WavefunctionSample& s : samples) {
      os << ',' << format_number(s.psi[i]);
    }
    os << '\n';
  }
  if (!emit(c.out, os.str(), out, err)) {
    return kExitUsage;
  }
  if (c.json_out) {
    json arr = json::array();
    for (const WavefunctionSample& s : samples) {
      const ResidualReport res = schrodinger_residual(c.spec, s, s.eps);
      if (res.coarse_warning) {
        err << "warning: level " << s.level << ": finite-difference error estimate "
            << format_number(res.truncation_estimate) << " exceeds 1e-06 on this grid\n";
      }
      arr.push_back({{"level", s.level},
                     {"eps", num(s.eps)},
                     {"energy", num(shown_energy(s.eps, c.units))},
                     {"free_param", num(s.free_param)},
                     {"nodes", count_nodes(s.psi)},
                     {"residual", num(res.residual)},
                     {"residual_including_origin", num(res.full_grid_residual)},
                     {"fd_error_estimate", num(res.truncation_estimate)},
                     {"coarse_grid_warning", res.coarse_warning},
                     {"normalized", s.normalized}});
    }
    json j = {{"command", "wavefunction"},
              {"potential", potential_json(c)},
              {"r_end", num(c.r_end)},
              {"points", grid.size()},
              {"levels", arr}};
    if (!emit(*c.json_out, j.dump(2) + "\n", out, err)) {
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyConfig vc;
  vc.spec = c.spec;
  vc.N = c.N_list.front();
  vc.free_param = c.nu;
  vc.quick = c.quick;
  vc.seed = c.seed;
  const VerifyReport report = run_verify(vc);
  std::ostringstream os;
  json arr = json::array();
  for (const CheckResult& r : report.checks) {
    os << (r.status == CheckStatus::Pass ? "PASS " : r.status == CheckStatus::Fail ? "FAIL " : "SKIP ") << r.name
       << ": " << r.detail << '\n';
    arr.push_back({{"name", r.name},
                   {"status", std::string(to_string(r.status))},
                   {"metric", num(r.metric)},
                   {"tolerance", num(r.tolerance)},
                   {"detail", r.detail}});
  }
  os << (report.all_passed() ? "verify: all checks passed\n" : "verify: some checks FAILED\n");
  if (!emit(c.out, os.str(), out, err)) {
    return kExitUsage;
  }
  if (c.json_out) {
    json j = {{"command", "verify"},
              {"potential", potential_json(c)},
              {"N", vc.N},
              {"quick", c.quick},
              {"seed", c.seed},
              {"passed", report.all_passed()},
              {"checks", arr}};
    if (!emit(*c.json_out, j.dump(2) + "\n", out, err)) {
      return kExitUsage;
    }
  }
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_scan_plateau(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const int N = c.N_list.front();
  const double root = std::sqrt(0.25 + c.spec.u0());
  double lo = 0.0;
  double hi = 0.0;
  if (c.spec.family == Family::A) {
    const NuRange r = plateau_range(root, N);
    lo = r.lo - 2.0;
    hi = -2.0 * N - 1.0 - root - 0.05;  // just inside nu < -2N - 1 - mu
  } else {
    lo = -0.95;
    hi = -2.0 * N - 1.0 + root - 0.05;  // mu < -2N - 1 - nu
    if (!(hi > lo)) {
      err << "scan-plateau: no admissible mu for N = " << N << '\n';
      return kExitUsage;
    }
  }
  lo = c.nu_min.value_or(lo);
  hi = c.nu_max.value_or(hi);
  const int points = c.points.value_or(201);
  if (!(hi > lo) || points < 2) {
    err << "scan-plateau: need --nu-min < --nu-max and at least 2 points\n";
    return kExitUsage;
  }
  std::vector<double> grid;
  for (int i = 0; i < points; ++i) {
    grid.push_back(lo + (hi - lo) * i / (points - 1));
  }
  PlateauOptions po;
  po.tolerance = c.tol;
  po.root = c.root;
  const PlateauReport rep = plateau_scan(c.spec, N, grid, po);
  for (const std::string& w : rep.warnings) {
    err << "warning: " << w << '\n';
  }
  std::size_t width = 0;
  for (const auto& row : rep.bound_levels) {
    width = std::max(width, row.size());
  }
  std::ostringstream os;
  if (c.format == Format::Csv) {
    os << (c.spec.family == Family::A ? "nu" : "mu");
    for (std::size_t k = 0; k < width; ++k) {
      os << ",level_" << k;
    }
    os << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << format_number(grid[i]);
      for (std::size_t k = 0; k < width; ++k) {
        os << ',';
        if (k < rep.bound_levels[i].size()) {
          os << format_number(shown_energy(rep.bound_levels[i][k], c.units));
        }
      }
      os << '\n';
    }
  } else {
    os << "plateaus (relative tolerance " << format_number(c.tol) << ", N = " << N << ")\n";
    for (const PlateauLevel& l : rep.levels) {
      os << "  level " << l.level << ": ";
      if (l.found) {
        os << '[' << format_number(l.free_lo) << ", " << format_number(l.free_hi) << "], " << l.points
           << " points, value " << format_number(shown_energy(l.value, c.units)) << '\n';
      } else {
        os << "none\n";
      }
    }
  }
  if (!emit(c.out, os.str(), out, err)) {
    return kExitUsage;
  }
  if (c.json_out) {
    json arr = json::array();
    for (const PlateauLevel& l : rep.levels) {
      json e = {{"level", l.level}, {"found", l.found}};
      if (l.found) {
        e["free_lo"] = num(l.free_lo);
        e["free_hi"] = num(l.free_hi);
        e["free_mid"] = num(l.free_mid);
        e["points"] = l.points;
        e["value"] = num(shown_energy(l.value, c.units));
      }
      arr.push_back(e);
    }
    json j = {{"command", "scan-plateau"}, {"potential", potential_json(c)}, {"N", N},
              {"tolerance", num(c.tol)},   {"levels", arr},                  {"warnings", rep.warnings}};
    if (!emit(*c.json_out, j.dump(2) + "\n", out, err)) {
      return kExitUsage;
    }
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file; command-line flags take precedence");
  sub->add_option("--family", f.family, "potential family: A (cosh) or B (sinh)");
  sub->add_option("--v0", f.v0, "strength of the 1/sinh^2 term");
  sub->add_option("--vplus", f.vplus, "family-A strength V+");
  sub->add_option("--vminus", f.vminus, "family-B strength V-");
  sub->add_option("--vs", f.vs, "second strength for either family");
  sub->add_option("--lambda", f.lambda, "range parameter lambda (default 1)");
  sub->add_option("--units", f.units, "half-lambda2 (default) or dimensionless");
  sub->add_option("--N", f.n_list, "basis size(s), comma separated");
  sub->add_option("--nu", f.nu, "free basis parameter (nu for A, mu for B); default: plateau middle");
  sub->add_option("--out", f.out, "output file, '-' for stdout (default)");
  sub->add_option("--json", f.json_out, "also write a JSON report to this path ('-' for stdout)");
  sub->add_option("--format", f.format, "csv (default) or text");
  sub->add_option("--nu-root", f.nu_root, "family B: sign of the fixed root nu = +-sqrt(1/4 + 2 V0 / l^2), default negative");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Bound states, phase shifts and wavefunctions of inverse-square-singular hyperbolic potentials",
               "tra-spectra");
  app.require_subcommand(1);
  Flags f;

  CLI::App* spectrum = app.add_subcommand("spectrum", "exact and matrix spectra over a list of basis sizes");
  add_common(spectrum, f);

  CLI::App* phase = app.add_subcommand("phase-shift", "continuum phase shift on an energy grid");
  add_common(phase, f);
  phase->add_option("--eps-min", f.eps_min, "lowest eps (default 0.01)");
  phase->add_option("--eps-max", f.eps_max, "highest eps (default 50)");
  phase->add_option("--points", f.points, "grid points (default 500)");
  phase->add_flag("--unwrap", f.unwrap, "add a 2 pi unwrapped column");
  phase->add_option("--z-branch", f.z_branch, "auto, positive or negative root of z^2");

  CLI::App* wave = app.add_subcommand("wavefunction", "bound-state wavefunctions on a radial grid");
  add_common(wave, f);
  wave->add_option("--levels", f.levels, "comma separated levels, or 'all' (default)");
  wave->add_option("--r-end", f.r_end, "grid end in units 1/lambda (default 6)");
  wave->add_option("--points", f.points, "grid points (default 2000)");
  wave->add_flag("--normalize", f.normalize, "scale to unit norm on the grid");
  wave->add_option("--z-branch", f.z_branch, "auto, positive or negative root of z^2");

  CLI::App* verify = app.add_subcommand("verify", "run the self-check suite");
  add_common(verify, f);
  verify->add_flag("--quick", f.quick, "smaller random samples and a coarser energy scan");
  verify->add_option("--seed", f.seed, "random seed");

  CLI::App* scan = app.add_subcommand("scan-plateau", "eigenvalues versus the free basis parameter");
  add_common(scan, f);
  scan->add_option("--nu-min", f.nu_min, "scan start");
  scan->add_option("--nu-max", f.nu_max, "scan end");
  scan->add_option("--points", f.points, "grid points (default 201)");
  scan->add_option("--tol", f.tol, "relative plateau tolerance (default 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const std::vector<CLI::App*> chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitUsage;
  }

  Problems problems;
  const RunConfig config = resolve(f, problems);
  if (!problems.empty()) {
    problems.report(err);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      return cmd_spectrum(config, out, err);
    }
    if (phase->parsed()) {
      return cmd_phase_shift(config, out, err);
    }
    if (wave->parsed()) {
      return cmd_wavefunction(config, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(config, out, err);
    }
    return cmd_scan_plateau(config, out, err);
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace tra
