#include "catqed/run.hpp"

#include "catqed/csv.hpp"
#include "catqed/parallel.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace catqed {

namespace {

std::string bool_field(bool b) { return b ? "1" : "0"; }

CsvWriter make_writer(const RunConfig& cfg) {
  CsvWriter csv;
  csv.comment("catqed " + cfg.experiment);
  for (const std::string& item : cfg.resolved_items()) csv.comment(item);
  return csv;
}

SystemParams system_params(const RunConfig& cfg) {
  SystemParams p;
  p.omega_cav = cfg.omega_cav;
  p.omega_eg = cfg.omega_eg;
  p.omega0 = cfg.omega0;
  p.n_atoms = cfg.n_atoms;
  p.n_max = cfg.n_max;
  return p;
}

ProtocolOptions protocol_options(const RunConfig& cfg, int threads) {
  ProtocolOptions opts;
  opts.cutoff = cfg.cutoff;
  opts.kernel = cfg.kernel;
  opts.retained = cfg.retained;
  opts.dt_cap = cfg.dt;
  opts.recompute_interval = cfg.recompute_interval;
  opts.threads = threads;
  return opts;
}

void maybe_dump_generator(const RunConfig& cfg, const std::string& out_dir,
                          RunOutcome& outcome) {
  if (cfg.dump_generator.empty()) return;
  SystemParams p = system_params(cfg);
  const SpectrumResult spec = diagonalize(build_dicke(p), cfg.retained);
  const GeneratorContext ctx = build_relaxation_operators(
      spec, build_jump_set(p.layout(), cfg.rates, cfg.cutoff), cfg.kernel);
  const std::string path = (std::filesystem::path(out_dir) / cfg.dump_generator).string();
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  dump_relaxation_operators(ctx, f);
  outcome.files.push_back(path);
}

void run_spectrum(const RunConfig& cfg, CsvWriter& csv) {
  const std::vector<SplittingRow> rows = splitting_curve(system_params(cfg), cfg.omega0_grid());
  csv.header({"omega0", "delta", "delta_check", "gap", "n_photons", "ansatz_fidelity_G",
              "converged"});
  for (const SplittingRow& r : rows)
    csv.row({format_number(r.omega0), format_number(r.delta), format_number(r.delta_check),
             format_number(r.gap), format_number(r.n_photons),
             format_number(r.ansatz_fidelity_G), bool_field(r.converged)});
}

const std::vector<std::string> kCoherenceColumns = {
    "n_atoms", "gamma_r",  "omega0",   "alpha",        "coherence_time", "time_min",
    "time_max", "censored", "regime_ok", "mean_photons", "delta",          "gap",
    "n_states"};

void coherence_row(CsvWriter& csv, int n_atoms, double gamma_r, const CoherenceResult& c) {
  csv.row({std::to_string(n_atoms), format_number(gamma_r), format_number(c.omega0),
           format_number(c.alpha), format_number(c.time_avg), format_number(c.time_min),
           format_number(c.time_max), bool_field(c.censored), bool_field(c.regime_ok),
           format_number(c.mean_photons), format_number(c.delta), format_number(c.gap),
           std::to_string(c.n_states)});
}

bool run_coherence(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const std::vector<double> gammas = cfg.gammas_r();
  const std::vector<double> omegas = cfg.omega0_grid();
  const InitialStateGrid grid{cfg.theta_points, cfg.phi_points};
  const ProtocolOptions opts = protocol_options(cfg, 1);

  struct Point {
    double gamma_r, omega0;
  };
  std::vector<Point> points;
  for (double g : gammas)
    for (double w : omegas) points.push_back({g, w});

  std::vector<CoherenceResult> results(points.size());
  parallel_for(int(points.size()), threads, [&](int i) {
    SystemParams p = system_params(cfg);
    p.omega0 = points[i].omega0;
    NoiseRates rates = cfg.rates;
    rates.r = points[i].gamma_r;
    results[i] = coherence_time_experiment(p, rates, grid, cfg.t_max, opts);
  });

  csv.header(kCoherenceColumns);
  bool censored = false;
  for (size_t i = 0; i < points.size(); ++i) {
    coherence_row(csv, cfg.n_atoms, points[i].gamma_r, results[i]);
    censored = censored || results[i].censored;
  }
  return censored;
}

bool run_coherence_scan(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const InitialStateGrid grid{cfg.theta_points, cfg.phi_points};
  ProtocolOptions opts = protocol_options(cfg, threads);
  bool censored = false;
  std::vector<std::string> peak_lines;
  csv.header(kCoherenceColumns);
  for (int n : cfg.atoms_list()) {
    SystemParams p = system_params(cfg);
    p.n_atoms = n;
    const PeakScan scan = coherence_peak_scan(p, cfg.alpha_grid(), cfg.rates, grid, cfg.t_max, opts);
    for (const CoherenceResult& c : scan.points) {
      coherence_row(csv, n, cfg.rates.r, c);
      censored = censored || c.censored;
    }
    peak_lines.push_back("peak n_atoms=" + std::to_string(n) +
                         " alpha=" + format_number(scan.peak_alpha) +
                         " coherence_time=" + format_number(scan.peak_time) +
                         " censored=" + bool_field(scan.peak_censored));
  }
  for (const std::string& line : peak_lines) csv.comment(line);
  return censored;
}

void gate_row(CsvWriter& csv, int n_atoms, double omega0, const GateReport& rep) {
  double fid_min = 1.0, fid_max = 0.0;
  for (double f : rep.per_state) {
    fid_min = std::min(fid_min, f);
    fid_max = std::max(fid_max, f);
  }
  csv.row({std::to_string(n_atoms), format_number(omega0), format_number(rep.theta),
           format_number(rep.duration), format_number(rep.amplitude),
           format_number(rep.fidelity), format_number(rep.fidelity_free),
           format_number(fid_min), format_number(fid_max), bool_field(rep.adiabatic_ok),
           bool_field(rep.regime_ok), format_number(rep.delta), format_number(rep.gap),
           format_number(rep.stats.min_eigenvalue)});
}

const std::vector<std::string> kGateColumns = {
    "n_atoms",       "omega0",   "theta",        "duration",  "amplitude",
    "fidelity",      "fidelity_free", "fid_min", "fid_max",   "adiabatic_ok",
    "regime_ok",     "delta",    "gap",          "min_eigenvalue"};

void run_gate_x(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const ProtocolOptions opts = protocol_options(cfg, threads);
  if (cfg.duration <= 0) throw std::invalid_argument("gate-x: schedule.duration must be > 0");
  csv.header(kGateColumns);
  for (int n : cfg.atoms_list())
    for (double w : cfg.omega0_grid()) {
      SystemParams p = system_params(cfg);
      p.n_atoms = n;
      p.omega0 = w;
      gate_row(csv, n, w, x_gate(p, cfg.theta, cfg.duration, cfg.rates, opts));
    }
}

void run_gate_z(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const ProtocolOptions opts = protocol_options(cfg, threads);
  csv.header(kGateColumns);
  const GateReport rep =
      z_gate(system_params(cfg), cfg.theta, cfg.duration, cfg.omega0_low, cfg.rates, opts);
  gate_row(csv, cfg.n_atoms, cfg.omega0, rep);
}

void run_gate_xx(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const ProtocolOptions opts = protocol_options(cfg, threads);
  if (cfg.duration <= 0) throw std::invalid_argument("gate-xx: schedule.duration must be > 0");
  csv.header(kGateColumns);
  for (double w : cfg.omega0_grid()) {
    SystemParams p = system_params(cfg);
    p.omega0 = w;
    gate_row(csv, cfg.n_atoms, w,
             xx_gate(p, cfg.theta, cfg.duration, cfg.rates, opts, cfg.product_levels));
  }
}

void run_robustness(const RunConfig& cfg, CsvWriter& csv, int threads) {
  const std::vector<double> omegas = cfg.omega0_grid();
  struct Row {
    double omega0, alpha_sq, delta;
    double yz_off, yz_diag, x_off, x_diag, ar_off, af_off;
  };
  std::vector<Row> rows(omegas.size());
  parallel_for(int(omegas.size()), threads, [&](int i) {
    SystemParams p = system_params(cfg);
    p.omega0 = omegas[i];
    const SpaceLayout lay = p.layout();
    const SpectrumResult spec = diagonalize(build_dicke(p), -1);
    const VacuumDoublet d = vacuum_doublet(spec, p);

    auto block = [&](const PerturbationParams& pert) {
      return perturbation_block(d, build_static_perturbation(pert, lay));
    };
    const int n = p.n_atoms;
    PerturbationParams yz{std::vector<double>(n, 0), std::vector<double>(n, 1),
                          std::vector<double>(n, 1), 0.0};
    PerturbationParams px{std::vector<double>(n, 1), std::vector<double>(n, 0),
                          std::vector<double>(n, 0), 0.0};
    PerturbationParams pa_re{std::vector<double>(n, 0), std::vector<double>(n, 0),
                             std::vector<double>(n, 0), Complex(1, 0)};
    PerturbationParams pa_im{std::vector<double>(n, 0), std::vector<double>(n, 0),
                             std::vector<double>(n, 0), Complex(0, 1)};
    const Eigen::Matrix2cd byz = block(yz), bx = block(px), bar = block(pa_re),
                           baf = block(pa_im);
    rows[i] = Row{p.omega0,
                  double(p.n_atoms) * p.omega0 * p.omega0 / (p.omega_cav * p.omega_cav),
                  d.delta,
                  std::abs(byz(0, 1)),
                  0.5 * std::abs(byz(0, 0) - byz(1, 1)),
                  std::abs(bx(0, 1)),
                  0.5 * std::abs(bx(0, 0) - bx(1, 1)),
                  std::abs(bar(0, 1)),
                  std::abs(baf(0, 1))};
  });

  csv.header({"omega0", "alpha_sq", "delta", "yz_offdiag", "yz_diag_split", "x_offdiag",
              "x_diag_split", "a_re_offdiag", "a_im_offdiag"});
  for (const Row& r : rows)
    csv.row_numbers({r.omega0, r.alpha_sq, r.delta, r.yz_off, r.yz_diag, r.x_off, r.x_diag,
                     r.ar_off, r.af_off});
}

} // namespace

RunOutcome run(const RunConfig& cfg, const std::string& out_dir, int threads) {
  cfg.validate();
  if (threads < 1) throw std::invalid_argument("run: threads must be >= 1");
  std::filesystem::create_directories(out_dir);

  RunOutcome outcome;
  CsvWriter csv = make_writer(cfg);
  bool censored = false;

  if (cfg.experiment == "spectrum") {
    run_spectrum(cfg, csv);
  } else if (cfg.experiment == "coherence") {
    censored = run_coherence(cfg, csv, threads);
  } else if (cfg.experiment == "coherence-scan") {
    censored = run_coherence_scan(cfg, csv, threads);
  } else if (cfg.experiment == "gate-x") {
    run_gate_x(cfg, csv, threads);
  } else if (cfg.experiment == "gate-z") {
    run_gate_z(cfg, csv, threads);
  } else if (cfg.experiment == "gate-xx") {
    run_gate_xx(cfg, csv, threads);
  } else if (cfg.experiment == "robustness") {
    run_robustness(cfg, csv, threads);
  } else {
    throw std::invalid_argument("run: unknown experiment " + cfg.experiment);
  }

  const std::string path = (std::filesystem::path(out_dir) / cfg.out_file).string();
  csv.write_file(path);
  outcome.files.push_back(path);
  maybe_dump_generator(cfg, out_dir, outcome);
  outcome.exit_code = censored ? 3 : 0;
  return outcome;
}

} // namespace catqed
