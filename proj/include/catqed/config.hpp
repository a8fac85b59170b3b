#pragma once

#include "catqed/dissipation.hpp"
#include "catqed/protocols.hpp"

#include <string>
#include <vector>

// Experiment configuration: a small key = value format with [section]
// headers and '#' comments. Unknown or duplicate keys are hard errors.
// Presets bundle the parameter sets of the standard experiments; --override
// entries ("section.key=value") are applied after parsing.

namespace catqed {

struct RunConfig {
  std::string experiment; // spectrum | coherence | coherence-scan | gate-x |
                          // gate-z | gate-xx | robustness
  std::string out_file;

  // [system]
  double omega_cav = 1.0;
  double omega_eg = 1.0;
  double omega0 = 2.0;
  int n_atoms = 1;
  int n_max = 40;
  int retained = 40;
  int product_levels = 16;

  // [rates]
  NoiseRates rates;
  double cutoff = 10.0;

  // [kernel]
  KernelOptions kernel;

  // [dynamics]
  double dt = 0.01;
  double t_max = 1e6;
  double recompute_interval = 1.0;

  // [grid]
  double omega0_min = 0.5, omega0_max = 2.5, omega0_step = 0.25;
  double alpha_min = 0.6, alpha_max = 2.4, alpha_step = 0.15;
  std::vector<int> n_atoms_list;      // defaults to {n_atoms}
  std::vector<double> gamma_r_list;   // defaults to {rates.r}
  int theta_points = 8;
  int phi_points = 8;

  // [schedule]
  double theta = 1.5707963267948966; // pi/2
  double duration = 0;               // <= 0: solve it (gate-z); required > 0 otherwise
  double omega0_low = 1.3;

  // [debug]
  std::string dump_generator; // optional U_k dump path

  std::vector<double> omega0_grid() const;
  std::vector<double> alpha_grid() const;
  std::vector<int> atoms_list() const;
  std::vector<double> gammas_r() const;
  void validate() const;

  // Canonical "key = value" listing of every resolved setting, echoed into
  // output headers so every CSV is self-describing.
  std::vector<std::string> resolved_items() const;
};

RunConfig parse_config(const std::string& text);
void apply_override(RunConfig& cfg, const std::string& key_equals_value);

std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);
RunConfig load_preset(const std::string& name);

} // namespace catqed
