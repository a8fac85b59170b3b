#include "catqed/protocols.hpp"

#include "catqed/parallel.hpp"

#include <cmath>

namespace catqed {

namespace {

constexpr double kZeroCoherenceTol = 1e-12;

// First crossing of |c(t)| = |c(0)|/e on a 4% geometric grid, linearly
// interpolated between scan points.
struct Crossing {
  double time = 0;
  bool censored = false;
};

Crossing find_crossing(const Eigen::VectorXcd& amplitudes, const Eigen::VectorXcd& eigenvalues,
                       double c0, double t_max) {
  const double target = c0 / M_E;
  double t_prev = 0.0, c_prev = c0;
  double t = std::min(1e-2, t_max);
  for (;;) {
    const double c = std::abs(eval_modes(amplitudes, eigenvalues, t));
    if (c < target) {
      const double frac = (c_prev - target) / std::max(c_prev - c, 1e-300);
      return {t_prev + frac * (t - t_prev), false};
    }
    if (t >= t_max) return {t_max, true};
    t_prev = t;
    c_prev = c;
    t = std::min(t * 1.04, t_max);
  }
}

SpectrumResult truncate(const SpectrumResult& s, int m) {
  SpectrumResult out;
  out.layout = s.layout;
  out.eigenvalues = s.eigenvalues.head(m);
  out.eigenvectors = s.eigenvectors.leftCols(m);
  return out;
}

// Fixed six-state set on the doublet Bloch sphere; q anchors +x to the
// control phase.
std::vector<Eigen::Vector2cd> six_state_set(Complex q) {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::Vector2cd> set;
  set.push_back({s, s * q});                  // +x
  set.push_back({s, -s * q});                 // -x
  set.push_back({s, s * q * Complex(0, 1)});  // +y
  set.push_back({s, -s * q * Complex(0, 1)}); // -y
  set.push_back({0, 1});                      // +z = Psi_E
  set.push_back({1, 0});                      // -z = Psi_G
  return set;
}

struct GateSetOutcome {
  double avg = 0;
  std::vector<double> per_state;
  EvolveStats stats;
};

// Evolve each initial state through the schedule and score it against the
// matching ideal final state (both given as coefficient vectors in the
// initial/final retained bases).
GateSetOutcome run_gate_set(const GeneratorSchedule& sched, const std::vector<Vec>& initial,
                            const std::vector<Vec>& ideal, int threads) {
  const int n = int(initial.size());
  GateSetOutcome out;
  out.per_state.resize(n);
  std::vector<EvolveStats> stats(n);
  parallel_for(n, threads, [&](int i) {
    const DensityMatrix rho0 = pure_state(sched.initial, initial[i]);
    ScheduledResult res = evolve_through(sched, {rho0});
    Vec psi = Vec::Zero(sched.final_ctx.retained());
    psi.head(ideal[i].size()) = ideal[i];
    out.per_state[i] = (psi.adjoint() * res.finals[0].rho * psi)(0).real();
    stats[i] = res.stats;
  });
  out.stats.min_eigenvalue = 1.0;
  for (const EvolveStats& s : stats) out.stats.merge(s);
  double sum = 0;
  for (double f : out.per_state) sum += f;
  out.avg = n ? sum / n : 0.0;
  return out;
}

} // namespace

std::vector<double> InitialStateGrid::thetas() const {
  if (n_theta < 1) throw std::invalid_argument("InitialStateGrid: n_theta must be >= 1");
  std::vector<double> v;
  if (n_theta == 1) return {0.0};
  for (int k = 0; k < n_theta; ++k) v.push_back(M_PI * double(k) / double(n_theta - 1));
  return v;
}

std::vector<double> InitialStateGrid::phis() const {
  if (n_phi < 1) throw std::invalid_argument("InitialStateGrid: n_phi must be >= 1");
  std::vector<double> v;
  for (int k = 0; k < n_phi; ++k) v.push_back(2.0 * M_PI * double(k) / double(n_phi));
  return v;
}

Eigen::Matrix2cd gauged_sigma_x(const GeneratorContext& ctx, const Mat& control_full) {
  const Complex zeta =
      (ctx.basis.col(1).adjoint() * control_full * ctx.basis.col(0))(0);
  const Complex q = std::abs(zeta) > 1e-14 ? zeta / std::abs(zeta) : Complex(1, 0);
  Eigen::Matrix2cd sx;
  sx << 0, std::conj(q), q, 0;
  return sx;
}

CoherenceResult coherence_time_experiment(const SystemParams& params, const NoiseRates& rates,
                                          const InitialStateGrid& grid, double t_max,
                                          const ProtocolOptions& opts) {
  params.validate();
  if (t_max <= 0) throw std::invalid_argument("coherence_time_experiment: t_max must be > 0");

  const SpectrumResult full = diagonalize(build_dicke(params), -1);
  const VacuumDoublet doublet = vacuum_doublet(full, params);
  const int m = std::min<int>(opts.retained, full.retained());
  const GeneratorContext ctx = build_relaxation_operators(
      truncate(full, m), build_jump_set(params.layout(), rates, opts.cutoff), opts.kernel);
  const GeneratorModes modes = decompose_generator(ctx);

  CoherenceResult res;
  res.omega0 = params.omega0;
  res.alpha = std::sqrt(double(params.n_atoms)) * params.omega0 / params.omega_eg;
  res.mean_photons = doublet.mean_photons;
  res.delta = doublet.delta;
  res.gap = doublet.gap;
  res.regime_ok = doublet.regime_ok;
  res.time_min = t_max;
  res.time_max = 0;

  double sum = 0;
  for (double theta : grid.thetas()) {
    for (double phi : grid.phis()) {
      const Complex init_coh = std::cos(theta) * std::sin(theta) * std::exp(Complex(0, -phi));
      if (std::abs(init_coh) < kZeroCoherenceTol) continue;
      Vec psi = Vec::Zero(m);
      psi(1) = std::cos(theta);
      psi(0) = std::sin(theta) * std::exp(Complex(0, phi));
      const Mat rho0 = psi * psi.adjoint();
      const Eigen::VectorXcd amps = element_modes(modes, rho0, 1, 0);
      const Crossing cross = find_crossing(amps, modes.eigenvalues, std::abs(init_coh), t_max);
      sum += cross.time;
      res.censored = res.censored || cross.censored;
      res.time_min = std::min(res.time_min, cross.time);
      res.time_max = std::max(res.time_max, cross.time);
      res.n_states += 1;
      res.per_state.push_back({theta, phi, cross.time, cross.censored});
    }
  }
  if (res.n_states == 0)
    throw std::runtime_error("coherence_time_experiment: no grid point has initial coherence");
  res.time_avg = sum / res.n_states;
  return res;
}

PeakScan coherence_peak_scan(const SystemParams& base, const std::vector<double>& alpha_grid,
                             const NoiseRates& rates, const InitialStateGrid& grid, double t_max,
                             const ProtocolOptions& opts) {
  if (alpha_grid.empty()) throw std::invalid_argument("coherence_peak_scan: empty grid");
  PeakScan scan;
  scan.points.resize(alpha_grid.size());
  parallel_for(int(alpha_grid.size()), opts.threads, [&](int i) {
    SystemParams p = base;
    p.omega0 = alpha_grid[i] * p.omega_eg / std::sqrt(double(p.n_atoms));
    scan.points[i] = coherence_time_experiment(p, rates, grid, t_max, opts);
  });

  size_t best = 0;
  for (size_t i = 1; i < scan.points.size(); ++i)
    if (scan.points[i].time_avg > scan.points[best].time_avg) best = i;
  scan.peak_alpha = scan.points[best].alpha;
  scan.peak_time = scan.points[best].time_avg;
  scan.peak_censored = scan.points[best].censored;

  if (best > 0 && best + 1 < scan.points.size()) {
    const double a0 = scan.points[best - 1].alpha, a1 = scan.points[best].alpha,
                 a2 = scan.points[best + 1].alpha;
    const double t0 = scan.points[best - 1].time_avg, t1 = scan.points[best].time_avg,
                 t2 = scan.points[best + 1].time_avg;
    scan.peak_censored = scan.peak_censored || scan.points[best - 1].censored ||
                         scan.points[best + 1].censored;
    const double denom = (a1 - a0) * (t1 - t2) - (a1 - a2) * (t1 - t0);
    if (std::abs(denom) > 1e-300) {
      const double num = (a1 - a0) * (a1 - a0) * (t1 - t2) - (a1 - a2) * (a1 - a2) * (t1 - t0);
      double a_star = a1 - 0.5 * num / denom;
      a_star = std::clamp(a_star, a0, a2);
      // parabola through the three points, evaluated at the vertex
      const double l0 = (a_star - a1) * (a_star - a2) / ((a0 - a1) * (a0 - a2));
      const double l1 = (a_star - a0) * (a_star - a2) / ((a1 - a0) * (a1 - a2));
      const double l2 = (a_star - a0) * (a_star - a1) / ((a2 - a0) * (a2 - a1));
      scan.peak_alpha = a_star;
      scan.peak_time = l0 * t0 + l1 * t1 + l2 * t2;
    }
  }
  return scan;
}

GateReport x_gate(const SystemParams& params, double theta_x, double duration,
                  const NoiseRates& rates, const ProtocolOptions& opts) {
  params.validate();
  if (duration <= 0) throw std::invalid_argument("x_gate: duration must be > 0");
  const SpaceLayout lay = params.layout();

  Schedule sch;
  sch.kind = Schedule::Kind::XAmplitude;
  sch.duration = duration;
  sch.amplitude = theta_x / Schedule::unit_pulse_area(duration);

  const Mat h0 = build_dicke(params).matrix;
  const Mat sx_full = embed(pauli(Axis::X), Slot::atom(1, 1), lay).matrix;
  ScheduledSystem sys;
  sys.hamiltonian_at = [&h0, &sx_full, sch](double t) -> Mat {
    return h0 + sch.value(t) * sx_full;
  };
  sys.channels = build_jump_set(lay, rates, opts.cutoff);
  sys.retained = opts.retained;
  sys.kernel = opts.kernel;
  ScheduledSystem sys_free = sys;
  sys_free.channels.clear();

  const GeneratorSchedule sched =
      build_generator_schedule(sys, duration, opts.recompute_interval, opts.dt_cap);
  const GeneratorSchedule sched_free =
      build_generator_schedule(sys_free, duration, opts.recompute_interval, opts.dt_cap);

  GateReport rep;
  rep.kind = "x";
  rep.theta = theta_x;
  rep.duration = duration;
  rep.amplitude = sch.amplitude;
  rep.delta = sched.initial.energies(1) - sched.initial.energies(0);
  rep.gap = sched.initial.energies(2) - sched.initial.energies(1);
  rep.regime_ok = rep.gap >= 10.0 * std::max(rep.delta, 1e-300);
  rep.adiabatic_ok = duration >= 50.0 / rep.gap;

  const Eigen::Matrix2cd sx_g = gauged_sigma_x(sched.initial, sx_full);
  const Eigen::Matrix2cd gate =
      std::cos(theta_x) * Eigen::Matrix2cd::Identity() - Complex(0, 1) * std::sin(theta_x) * sx_g;
  const Complex q = sx_g(1, 0);

  std::vector<Vec> initial, ideal;
  for (const Eigen::Vector2cd& s : six_state_set(q)) {
    initial.push_back(Vec(s));
    Eigen::Vector2cd out = gate * s;
    out(1) *= std::exp(Complex(0, -rep.delta * duration)); // static-splitting frame
    ideal.push_back(Vec(out));
  }

  GateSetOutcome diss = run_gate_set(sched, initial, ideal, opts.threads);
  GateSetOutcome free_run = run_gate_set(sched_free, initial, ideal, opts.threads);
  rep.fidelity = diss.avg;
  rep.fidelity_free = free_run.avg;
  rep.per_state = std::move(diss.per_state);
  rep.per_state_free = std::move(free_run.per_state);
  rep.stats = diss.stats;
  rep.stats_free = free_run.stats;
  return rep;
}

GateReport z_gate(const SystemParams& params, double theta_z, double duration, double omega0_low,
                  const NoiseRates& rates, const ProtocolOptions& opts) {
  params.validate();
  const double high = params.omega0;
  if (omega0_low <= 0 || omega0_low > high)
    throw std::invalid_argument("z_gate: need 0 < omega0_low <= omega0");
  if (theta_z < 0) throw std::invalid_argument("z_gate: theta_z must be >= 0");

  // Exact-diagonalization splitting table over the trajectory range; the
  // linear interpolant of this table is the calibration model.
  const double table_step = 0.005;
  std::vector<double> grid;
  const int n_rows = std::max(2, int(std::ceil((high - omega0_low) / table_step)) + 1);
  for (int i = 0; i < n_rows; ++i)
    grid.push_back(omega0_low + (high - omega0_low) * double(i) / double(n_rows - 1));
  const std::vector<SplittingRow> table = splitting_curve(params, grid);
  for (const SplittingRow& row : table)
    if (!row.converged)
      throw std::runtime_error("z_gate: splitting table not converged at omega0=" +
                               std::to_string(row.omega0) + "; raise n_max");

  // Mean splitting over a V trajectory [x, high]: time-uniform sweep makes it
  // the Omega0-average of the interpolant, i.e. a trapezoid sum.
  auto mean_delta_from = [&](double x) {
    if (x >= high) return table.back().delta;
    double acc = 0;
    double prev_w = x;
    double prev_d = 0;
    // interpolated value at x
    size_t j = 1;
    while (j + 1 < table.size() && table[j].omega0 <= x) ++j;
    const double f = (x - table[j - 1].omega0) / (table[j].omega0 - table[j - 1].omega0);
    prev_d = table[j - 1].delta + f * (table[j].delta - table[j - 1].delta);
    for (size_t i = j; i < table.size(); ++i) {
      acc += 0.5 * (prev_d + table[i].delta) * (table[i].omega0 - prev_w);
      prev_w = table[i].omega0;
      prev_d = table[i].delta;
    }
    return acc / (high - x);
  };

  // Relative doublet phase of e^{-i theta_z Sigma_z} is 2 theta_z.
  const double target_action = 2.0 * theta_z;
  Schedule sch;
  sch.kind = Schedule::Kind::Omega0Trajectory;
  sch.omega0_high = high;

  if (theta_z == 0.0) {
    sch.omega0_low = high;
    sch.duration = duration > 0 ? duration : 1.0;
  } else if (duration <= 0) {
    sch.omega0_low = omega0_low;
    sch.duration = target_action / mean_delta_from(omega0_low);
  } else {
    sch.duration = duration;
    const double need = target_action / duration;
    if (need > mean_delta_from(omega0_low) || need < table.back().delta)
      throw std::invalid_argument("z_gate: requested duration not reachable within the table range");
    double lo = omega0_low, hi_x = high;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi_x);
      if (mean_delta_from(mid) > need)
        lo = mid;
      else
        hi_x = mid;
    }
    sch.omega0_low = 0.5 * (lo + hi_x);
  }

  ScheduledSystem sys;
  sys.hamiltonian_at = [params, sch](double t) {
    SystemParams p = params;
    p.omega0 = sch.value(t);
    return build_dicke(p).matrix;
  };
  sys.channels = build_jump_set(params.layout(), rates, opts.cutoff);
  sys.retained = opts.retained;
  sys.kernel = opts.kernel;
  ScheduledSystem sys_free = sys;
  sys_free.channels.clear();

  const GeneratorSchedule sched =
      build_generator_schedule(sys, sch.duration, opts.recompute_interval, opts.dt_cap);
  const GeneratorSchedule sched_free =
      build_generator_schedule(sys_free, sch.duration, opts.recompute_interval, opts.dt_cap);

  GateReport rep;
  rep.kind = "z";
  rep.theta = theta_z;
  rep.duration = sch.duration;
  rep.amplitude = sch.omega0_low;
  rep.delta = sched.initial.energies(1) - sched.initial.energies(0);
  rep.gap = sched.initial.energies(2) - sched.initial.energies(1);
  rep.regime_ok = rep.gap >= 10.0 * std::max(rep.delta, 1e-300);
  rep.adiabatic_ok = sch.duration >= 50.0 / rep.gap;

  const Mat sx_full = embed(pauli(Axis::X), Slot::atom(1, 1), params.layout()).matrix;
  const Complex q = gauged_sigma_x(sched.initial, sx_full)(1, 0);
  Eigen::Matrix2cd gate = Eigen::Matrix2cd::Zero();
  gate(0, 0) = std::exp(Complex(0, theta_z));  // Sigma_z = -1 on Psi_G
  gate(1, 1) = std::exp(Complex(0, -theta_z));

  std::vector<Vec> initial, ideal;
  for (const Eigen::Vector2cd& s : six_state_set(q)) {
    initial.push_back(Vec(s));
    ideal.push_back(Vec(Eigen::Vector2cd(gate * s)));
  }

  GateSetOutcome diss = run_gate_set(sched, initial, ideal, opts.threads);
  GateSetOutcome free_run = run_gate_set(sched_free, initial, ideal, opts.threads);
  rep.fidelity = diss.avg;
  rep.fidelity_free = free_run.avg;
  rep.per_state = std::move(diss.per_state);
  rep.per_state_free = std::move(free_run.per_state);
  rep.stats = diss.stats;
  rep.stats_free = free_run.stats;
  return rep;
}

GateReport xx_gate(const SystemParams& per_resonator, double theta, double duration,
                   const NoiseRates& rates, const ProtocolOptions& opts, int product_levels) {
  per_resonator.validate();
  if (duration <= 0) throw std::invalid_argument("xx_gate: duration must be > 0");
  if (product_levels < 4) throw std::invalid_argument("xx_gate: need product_levels >= 4");

  // Truncated product of single-resonator eigenbases: K levels per resonator.
  const SpectrumResult single = diagonalize(build_dicke(per_resonator), product_levels);
  const int k = single.retained();
  const Mat vk = single.eigenvectors;
  const SpaceLayout lay1 = per_resonator.layout();
  const Mat idk = Mat::Identity(k, k);

  auto small = [&](const Mat& full) -> Mat { return vk.adjoint() * full * vk; };
  const Mat xs = small(embed(pauli(Axis::X), Slot::atom(1, 1), lay1).matrix);
  const Mat a = annihilation(per_resonator.n_max);
  const Mat rv = small(embed(Mat(a + a.adjoint()), Slot::photon(1), lay1).matrix);
  const Mat rf = small(embed(Mat(Complex(0, 1) * (a - a.adjoint())), Slot::photon(1), lay1).matrix);

  Mat h0 = Mat::Zero(k * k, k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      h0(i * k + j, i * k + j) = single.eigenvalues(i) + single.eigenvalues(j);
  const Mat x12 = kron(xs, xs);

  std::vector<NoiseChannel> channels;
  auto add = [&](const std::string& label, Mat jump, double rate) {
    if (rate > 0) channels.push_back({label, std::move(jump), rate, opts.cutoff});
  };
  for (int res = 1; res <= 2; ++res) {
    auto lift = [&](const Mat& s) { return res == 1 ? kron(s, idk) : kron(idk, s); };
    const std::string suf = ":" + std::to_string(res);
    add("r_v" + suf, lift(rv), rates.r);
    add("r_f" + suf, lift(rf), rates.r);
    for (int j = 1; j <= per_resonator.n_atoms; ++j) {
      const std::string js = std::to_string(j);
      add("x_" + js + suf, lift(small(embed(pauli(Axis::X), Slot::atom(j, 1), lay1).matrix)), rates.x);
      add("y_" + js + suf, lift(small(embed(pauli(Axis::Y), Slot::atom(j, 1), lay1).matrix)), rates.y);
      add("z_" + js + suf, lift(small(embed(pauli(Axis::Z), Slot::atom(j, 1), lay1).matrix)), rates.z);
    }
  }
  add("x12", x12, rates.x12);

  Schedule sch;
  sch.kind = Schedule::Kind::XXAmplitude;
  sch.duration = duration;
  sch.amplitude = theta / Schedule::unit_pulse_area(duration);

  ScheduledSystem sys;
  sys.hamiltonian_at = [&h0, &x12, sch](double t) -> Mat { return h0 + sch.value(t) * x12; };
  sys.channels = channels;
  sys.retained = std::min<int>(opts.retained, k * k);
  sys.kernel = opts.kernel;
  ScheduledSystem sys_free = sys;
  sys_free.channels.clear();

  const GeneratorSchedule sched =
      build_generator_schedule(sys, duration, opts.recompute_interval, opts.dt_cap);
  const GeneratorSchedule sched_free =
      build_generator_schedule(sys_free, duration, opts.recompute_interval, opts.dt_cap);

  // Locate the four computational product states in the retained basis. H(0)
  // is diagonal in the product basis, so these are (numerically exact) unit
  // vectors; anything else means the truncation is unusable.
  const int m = sched.initial.retained();
  int pos[2][2];
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b1 = 0; b1 < 2; ++b1) {
      const long idx = long(a1) * k + b1;
      int found = -1;
      for (int c = 0; c < m; ++c)
        if (std::abs(sched.initial.basis(idx, c)) > 0.999) {
          found = c;
          break;
        }
      if (found < 0)
        throw std::runtime_error("xx_gate: computational state not resolved in retained basis");
      pos[a1][b1] = found;
    }

  GateReport rep;
  rep.kind = "xx";
  rep.theta = theta;
  rep.duration = duration;
  rep.amplitude = sch.amplitude;
  rep.delta = single.eigenvalues(1) - single.eigenvalues(0);
  rep.gap = single.eigenvalues(2) - single.eigenvalues(1);
  rep.regime_ok = rep.gap >= 10.0 * std::max(rep.delta, 1e-300);
  rep.adiabatic_ok = duration >= 50.0 / rep.gap;

  // Per-qubit gauge from the single-resonator control element.
  const Complex zeta = xs(1, 0);
  const Complex q = std::abs(zeta) > 1e-14 ? zeta / std::abs(zeta) : Complex(1, 0);
  Eigen::Matrix2cd sx_g;
  sx_g << 0, std::conj(q), q, 0;
  const Eigen::Matrix4cd gate4 =
      std::cos(theta) * Eigen::Matrix4cd::Identity() -
      Complex(0, 1) * std::sin(theta) * Eigen::Matrix4cd(kron(sx_g, sx_g));

  // 16 product states of {G, E, +x, +y} per qubit.
  const double s2 = 1.0 / std::sqrt(2.0);
  std::vector<Eigen::Vector2cd> singles = {
      {1, 0}, {0, 1}, {s2, s2 * q}, {s2, s2 * q * Complex(0, 1)}};

  std::vector<Vec> initial, ideal;
  for (const Eigen::Vector2cd& u : singles)
    for (const Eigen::Vector2cd& v : singles) {
      Eigen::Vector4cd c4;
      for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1) c4(a1 * 2 + b1) = u(a1) * v(b1);
      Vec psi0 = Vec::Zero(m);
      for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1) psi0(pos[a1][b1]) = c4(a1 * 2 + b1);
      initial.push_back(psi0);

      Eigen::Vector4cd c4i = gate4 * c4;
      Vec psi1 = Vec::Zero(m);
      const double e00 = sched.initial.energies(pos[0][0]);
      for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1) {
          const double de = sched.initial.energies(pos[a1][b1]) - e00;
          psi1(pos[a1][b1]) = c4i(a1 * 2 + b1) * std::exp(Complex(0, -de * duration));
        }
      ideal.push_back(psi1);
    }

  GateSetOutcome diss = run_gate_set(sched, initial, ideal, opts.threads);
  GateSetOutcome free_run = run_gate_set(sched_free, initial, ideal, opts.threads);
  rep.fidelity = diss.avg;
  rep.fidelity_free = free_run.avg;
  rep.per_state = std::move(diss.per_state);
  rep.per_state_free = std::move(free_run.per_state);
  rep.stats = diss.stats;
  rep.stats_free = free_run.stats;
  return rep;
}

ReadoutProbabilities readout_probabilities(const DensityMatrix& rho) {
  if (rho.rho.rows() < 2) throw std::invalid_argument("readout_probabilities: need >= 2 levels");
  ReadoutProbabilities out;
  const double pop = (rho.rho(0, 0) + rho.rho(1, 1)).real();
  const double coh = rho.rho(0, 1).real();
  out.p_plus = 0.5 * pop + coh;
  out.p_minus = 0.5 * pop - coh;
  out.p_leak = 1.0 - pop;
  return out;
}

} // namespace catqed
