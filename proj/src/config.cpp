#include "catqed/config.hpp"

#include "catqed/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace catqed {

namespace {

const std::vector<std::string> kExperiments = {
    "spectrum", "coherence", "coherence-scan", "gate-x", "gate-z", "gate-xx", "robustness"};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw std::invalid_argument("config: bad number for '" + key + "': " + v);
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  if (x != std::floor(x) || std::abs(x) > 1e9)
    throw std::invalid_argument("config: bad integer for '" + key + "': " + v);
  return int(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("config: bad bool for '" + key + "': " + v);
}

template <typename T, typename F>
std::vector<T> parse_list(const std::string& key, const std::string& v, F item) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty())
      throw std::invalid_argument("config: empty element in list '" + key + "'");
    out.push_back(item(key, part));
  }
  if (out.empty()) throw std::invalid_argument("config: empty list for '" + key + "'");
  return out;
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "experiment") {
    cfg.experiment = value;
  } else if (key == "out") {
    cfg.out_file = value;
  } else if (key == "system.omega_cav") {
    cfg.omega_cav = parse_double(key, value);
  } else if (key == "system.omega_eg") {
    cfg.omega_eg = parse_double(key, value);
  } else if (key == "system.omega0") {
    cfg.omega0 = parse_double(key, value);
  } else if (key == "system.n_atoms") {
    cfg.n_atoms = parse_int(key, value);
  } else if (key == "system.n_max") {
    cfg.n_max = parse_int(key, value);
  } else if (key == "system.retained") {
    cfg.retained = parse_int(key, value);
  } else if (key == "system.product_levels") {
    cfg.product_levels = parse_int(key, value);
  } else if (key == "rates.r") {
    cfg.rates.r = parse_double(key, value);
  } else if (key == "rates.x") {
    cfg.rates.x = parse_double(key, value);
  } else if (key == "rates.y") {
    cfg.rates.y = parse_double(key, value);
  } else if (key == "rates.z") {
    cfg.rates.z = parse_double(key, value);
  } else if (key == "rates.x12") {
    cfg.rates.x12 = parse_double(key, value);
  } else if (key == "rates.cutoff") {
    cfg.cutoff = parse_double(key, value);
  } else if (key == "kernel.include_lamb") {
    cfg.kernel.include_lamb = parse_bool(key, value);
  } else if (key == "kernel.epsilon") {
    cfg.kernel.epsilon = parse_double(key, value);
  } else if (key == "kernel.edge") {
    if (value == "zero")
      cfg.kernel.edge = KernelOptions::EdgeWeight::Zero;
    else if (value == "half")
      cfg.kernel.edge = KernelOptions::EdgeWeight::Half;
    else if (value == "full")
      cfg.kernel.edge = KernelOptions::EdgeWeight::Full;
    else
      throw std::invalid_argument("config: kernel.edge must be zero|half|full, got " + value);
  } else if (key == "dynamics.dt") {
    cfg.dt = parse_double(key, value);
  } else if (key == "dynamics.t_max") {
    cfg.t_max = parse_double(key, value);
  } else if (key == "dynamics.recompute_interval") {
    cfg.recompute_interval = parse_double(key, value);
  } else if (key == "grid.omega0_min") {
    cfg.omega0_min = parse_double(key, value);
  } else if (key == "grid.omega0_max") {
    cfg.omega0_max = parse_double(key, value);
  } else if (key == "grid.omega0_step") {
    cfg.omega0_step = parse_double(key, value);
  } else if (key == "grid.alpha_min") {
    cfg.alpha_min = parse_double(key, value);
  } else if (key == "grid.alpha_max") {
    cfg.alpha_max = parse_double(key, value);
  } else if (key == "grid.alpha_step") {
    cfg.alpha_step = parse_double(key, value);
  } else if (key == "grid.n_atoms_list") {
    cfg.n_atoms_list = parse_list<int>(key, value, parse_int);
  } else if (key == "grid.gamma_r_list") {
    cfg.gamma_r_list = parse_list<double>(key, value, parse_double);
  } else if (key == "grid.theta_points") {
    cfg.theta_points = parse_int(key, value);
  } else if (key == "grid.phi_points") {
    cfg.phi_points = parse_int(key, value);
  } else if (key == "schedule.theta") {
    cfg.theta = parse_double(key, value);
  } else if (key == "schedule.duration") {
    cfg.duration = parse_double(key, value);
  } else if (key == "schedule.omega0_low") {
    cfg.omega0_low = parse_double(key, value);
  } else if (key == "debug.dump_generator") {
    cfg.dump_generator = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

std::vector<double> range_grid(double lo, double hi, double step, const char* what) {
  if (step <= 0) throw std::invalid_argument(std::string("config: ") + what + " step must be > 0");
  if (hi < lo) throw std::invalid_argument(std::string("config: ") + what + " range is empty");
  std::vector<double> grid;
  const int n = int(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < n; ++i) grid.push_back(lo + step * i);
  return grid;
}

} // namespace

std::vector<double> RunConfig::omega0_grid() const {
  return range_grid(omega0_min, omega0_max, omega0_step, "omega0");
}

std::vector<double> RunConfig::alpha_grid() const {
  return range_grid(alpha_min, alpha_max, alpha_step, "alpha");
}

std::vector<int> RunConfig::atoms_list() const {
  return n_atoms_list.empty() ? std::vector<int>{n_atoms} : n_atoms_list;
}

std::vector<double> RunConfig::gammas_r() const {
  return gamma_r_list.empty() ? std::vector<double>{rates.r} : gamma_r_list;
}

void RunConfig::validate() const {
  if (experiment.empty()) {
    std::string names;
    for (const auto& e : kExperiments) names += (names.empty() ? "" : ", ") + e;
    throw std::invalid_argument("config: experiment is required; valid experiments: " + names);
  }
  if (std::find(kExperiments.begin(), kExperiments.end(), experiment) == kExperiments.end()) {
    std::string names;
    for (const auto& e : kExperiments) names += (names.empty() ? "" : ", ") + e;
    throw std::invalid_argument("config: unknown experiment '" + experiment +
                                "'; valid experiments: " + names);
  }
  if (out_file.empty()) throw std::invalid_argument("config: out is required");
  if (rates.r < 0 || rates.x < 0 || rates.y < 0 || rates.z < 0 || rates.x12 < 0)
    throw std::invalid_argument("config: rates must be >= 0");
  for (double g : gammas_r())
    if (g < 0) throw std::invalid_argument("config: gamma_r_list entries must be >= 0");
  if (cutoff <= 0) throw std::invalid_argument("config: rates.cutoff must be > 0");
  if (omega0 < 0 || omega_cav <= 0 || omega_eg <= 0)
    throw std::invalid_argument("config: bad system frequencies");
  if (n_atoms < 1 || n_max < 1) throw std::invalid_argument("config: bad system sizes");
  for (int n : atoms_list())
    if (n < 1) throw std::invalid_argument("config: n_atoms_list entries must be >= 1");
  if (retained < 3) throw std::invalid_argument("config: system.retained must be >= 3");
  if (product_levels < 4) throw std::invalid_argument("config: system.product_levels must be >= 4");
  if (dt <= 0 || t_max <= 0 || recompute_interval <= 0)
    throw std::invalid_argument("config: dynamics values must be > 0");
  if (theta_points < 1 || phi_points < 1)
    throw std::invalid_argument("config: grid must have at least one point per angle");
  if (kernel.epsilon <= 0) throw std::invalid_argument("config: kernel.epsilon must be > 0");
  omega0_grid();
  alpha_grid();
}

std::vector<std::string> RunConfig::resolved_items() const {
  auto num = [](double v) { return format_number(v); };
  auto list_d = [&](const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
    return s;
  };
  auto list_i = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  const char* edge = kernel.edge == KernelOptions::EdgeWeight::Zero   ? "zero"
                     : kernel.edge == KernelOptions::EdgeWeight::Half ? "half"
                                                                      : "full";
  std::vector<std::string> items = {
      "experiment = " + experiment,
      "out = " + out_file,
      "system.omega_cav = " + num(omega_cav),
      "system.omega_eg = " + num(omega_eg),
      "system.omega0 = " + num(omega0),
      "system.n_atoms = " + std::to_string(n_atoms),
      "system.n_max = " + std::to_string(n_max),
      "system.retained = " + std::to_string(retained),
      "system.product_levels = " + std::to_string(product_levels),
      "rates.r = " + num(rates.r),
      "rates.x = " + num(rates.x),
      "rates.y = " + num(rates.y),
      "rates.z = " + num(rates.z),
      "rates.x12 = " + num(rates.x12),
      "rates.cutoff = " + num(cutoff),
      std::string("kernel.include_lamb = ") + (kernel.include_lamb ? "true" : "false"),
      "kernel.epsilon = " + num(kernel.epsilon),
      std::string("kernel.edge = ") + edge,
      "dynamics.dt = " + num(dt),
      "dynamics.t_max = " + num(t_max),
      "dynamics.recompute_interval = " + num(recompute_interval),
      "grid.omega0_min = " + num(omega0_min),
      "grid.omega0_max = " + num(omega0_max),
      "grid.omega0_step = " + num(omega0_step),
      "grid.alpha_min = " + num(alpha_min),
      "grid.alpha_max = " + num(alpha_max),
      "grid.alpha_step = " + num(alpha_step),
      "grid.n_atoms_list = " + list_i(atoms_list()),
      "grid.gamma_r_list = " + list_d(gammas_r()),
      "grid.theta_points = " + std::to_string(theta_points),
      "grid.phi_points = " + std::to_string(phi_points),
      "schedule.theta = " + num(theta),
      "schedule.duration = " + num(duration),
      "schedule.omega0_low = " + num(omega0_low),
  };
  return items;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::map<std::string, bool> seen;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: bad section at line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: empty key or value at line " + std::to_string(lineno));
    if (!section.empty()) key = section + "." + key;
    if (seen.count(key)) throw std::invalid_argument("config: duplicate key '" + key + "'");
    seen[key] = true;
    set_key(cfg, key, value);
  }
  return cfg;
}

void apply_override(RunConfig& cfg, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("override must be key=value, got '" + kv + "'");
  const std::string key = trim(kv.substr(0, eq));
  const std::string value = trim(kv.substr(eq + 1));
  if (key.empty() || value.empty())
    throw std::invalid_argument("override must be key=value, got '" + kv + "'");
  set_key(cfg, key, value);
}

namespace {

struct Preset {
  const char* name;
  const char* text;
};

// Standard experiment configurations. Rates are in units of omega_eg.
const Preset kPresets[] = {
    {"splitting-law",
     "experiment = spectrum\n"
     "out = splitting_law.csv\n"
     "[system]\n"
     "n_atoms = 1\n"
     "n_max = 40\n"
     "[grid]\n"
     "omega0_min = 1.2\n"
     "omega0_max = 2.0\n"
     "omega0_step = 0.1\n"},
    {"fig2-left",
     "experiment = coherence\n"
     "out = coherence_vs_omega0.csv\n"
     "[system]\n"
     "n_atoms = 1\n"
     "n_max = 40\n"
     "retained = 20\n"
     "[rates]\n"
     "x = 1e-6\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[grid]\n"
     "omega0_min = 0.5\n"
     "omega0_max = 2.5\n"
     "omega0_step = 0.25\n"
     "gamma_r_list = 1e-6,1e-7,0\n"
     "[dynamics]\n"
     "t_max = 2e6\n"},
    {"fig2-topright",
     "experiment = coherence-scan\n"
     "out = coherence_vs_alpha.csv\n"
     "[system]\n"
     "n_max = 40\n"
     "retained = 20\n"
     "[rates]\n"
     "r = 1e-6\n"
     "x = 1e-5\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[grid]\n"
     "n_atoms_list = 1,2,3\n"
     "alpha_min = 0.6\n"
     "alpha_max = 2.4\n"
     "alpha_step = 0.15\n"
     "[dynamics]\n"
     "t_max = 2e6\n"},
    {"fig2-bottomright-lowx",
     "experiment = coherence-scan\n"
     "out = peak_coherence_lowx.csv\n"
     "[system]\n"
     "n_max = 40\n"
     "retained = 20\n"
     "[rates]\n"
     "r = 1e-6\n"
     "x = 1e-6\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[grid]\n"
     "n_atoms_list = 1,2,3\n"
     "alpha_min = 0.6\n"
     "alpha_max = 2.4\n"
     "alpha_step = 0.15\n"
     "[dynamics]\n"
     "t_max = 2e6\n"},
    {"fig2-bottomright-highx",
     "experiment = coherence-scan\n"
     "out = peak_coherence_highx.csv\n"
     "[system]\n"
     "n_max = 40\n"
     "retained = 20\n"
     "[rates]\n"
     "r = 1e-6\n"
     "x = 1e-4\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[grid]\n"
     "n_atoms_list = 1,2,3\n"
     "alpha_min = 0.6\n"
     "alpha_max = 2.4\n"
     "alpha_step = 0.15\n"
     "[dynamics]\n"
     "t_max = 2e6\n"},
    {"fig3-left",
     "experiment = gate-x\n"
     "out = xgate_fidelity.csv\n"
     "[system]\n"
     "n_max = 40\n"
     "retained = 16\n"
     "[rates]\n"
     "r = 1e-6\n"
     "x = 1e-6\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[grid]\n"
     "n_atoms_list = 1,2,3\n"
     "omega0_min = 1.2\n"
     "omega0_max = 2.0\n"
     "omega0_step = 0.2\n"
     "[schedule]\n"
     "duration = 120\n"},
    {"fig3-right",
     "experiment = gate-xx\n"
     "out = xxgate_fidelity.csv\n"
     "[system]\n"
     "n_atoms = 1\n"
     "n_max = 30\n"
     "retained = 24\n"
     "product_levels = 14\n"
     "[rates]\n"
     "r = 1e-6\n"
     "x = 1e-6\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "x12 = 1e-6\n"
     "[grid]\n"
     "omega0_min = 1.4\n"
     "omega0_max = 2.0\n"
     "omega0_step = 0.2\n"
     "[schedule]\n"
     "duration = 150\n"},
    {"zgate-headline",
     "experiment = gate-z\n"
     "out = zgate_fidelity.csv\n"
     "[system]\n"
     "n_atoms = 1\n"
     "n_max = 40\n"
     "retained = 24\n"
     "omega0 = 2.0\n"
     "[rates]\n"
     "x = 1e-6\n"
     "y = 1e-3\n"
     "z = 1e-3\n"
     "[schedule]\n"
     "omega0_low = 1.3\n"
     "[dynamics]\n"
     "recompute_interval = 0.5\n"},
    {"robustness",
     "experiment = robustness\n"
     "out = perturbation_blocks.csv\n"
     "[system]\n"
     "n_atoms = 1\n"
     "n_max = 40\n"
     "[grid]\n"
     "omega0_min = 1.0\n"
     "omega0_max = 2.0\n"
     "omega0_step = 0.125\n"},
};

} // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const Preset& p : kPresets) names.push_back(p.name);
  return names;
}

std::string preset_text(const std::string& name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return p.text;
  std::string names;
  for (const Preset& p : kPresets) names += (names.empty() ? "" : ", ") + std::string(p.name);
  throw std::invalid_argument("unknown preset '" + name + "'; available: " + names);
}

RunConfig load_preset(const std::string& name) { return parse_config(preset_text(name)); }

} // namespace catqed
