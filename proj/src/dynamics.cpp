#include "catqed/dynamics.hpp"

#include "catqed/csv.hpp"

#include <cmath>
#include <ostream>
#include <random>

namespace catqed {

namespace {

constexpr double kStepCorrectionTol = 1e-9;
constexpr double kNegativityTol = -1e-7;
constexpr double kLeakageTol = 1e-6;

double min_eigenvalue(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// One RK4 step in place, then re-Hermitize and renormalize the trace.
struct Rk4Workspace {
  Mat k1, k2, k3, k4, y;

  void resize(int m) {
    k1.resize(m, m);
    k2.resize(m, m);
    k3.resize(m, m);
    k4.resize(m, m);
    y.resize(m, m);
  }
};

void rk4_step(const GeneratorContext& ctx, Mat& rho, double h, Rk4Workspace& w,
              EvolveStats& stats) {
  w.k1 = apply_generator_hermitian(ctx, rho);
  w.y = rho + (h / 2) * w.k1;
  w.k2 = apply_generator_hermitian(ctx, w.y);
  w.y = rho + (h / 2) * w.k2;
  w.k3 = apply_generator_hermitian(ctx, w.y);
  w.y = rho + h * w.k3;
  w.k4 = apply_generator_hermitian(ctx, w.y);
  rho += (h / 6) * w.k1 + (h / 3) * w.k2 + (h / 3) * w.k3 + (h / 6) * w.k4;

  const double herm = 0.5 * hermiticity_defect(rho);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const Complex tr = rho.trace();
  const double trace_err = std::abs(tr - Complex(1, 0));
  if (herm > kStepCorrectionTol || trace_err > kStepCorrectionTol)
    throw std::runtime_error(
        "evolve: per-step invariant violation (hermiticity " + std::to_string(herm) +
        ", trace " + std::to_string(trace_err) + "); step size too large or generator invalid");
  rho /= tr.real();
  stats.steps += 1;
  stats.max_hermiticity_correction = std::max(stats.max_hermiticity_correction, herm);
  stats.cum_hermiticity_correction += herm;
  stats.max_trace_correction = std::max(stats.max_trace_correction, trace_err);
  stats.cum_trace_correction += trace_err;
}

void check_negativity(const Mat& rho, EvolveStats& stats) {
  const double lo = min_eigenvalue(rho);
  stats.min_eigenvalue = std::min(stats.min_eigenvalue, lo);
  if (lo < kNegativityTol)
    throw std::runtime_error("evolve: density-matrix eigenvalue excursion " +
                             std::to_string(lo) + " below tolerance");
}

} // namespace

void EvolveStats::merge(const EvolveStats& o) {
  steps += o.steps;
  dt = std::max(dt, o.dt);
  max_hermiticity_correction = std::max(max_hermiticity_correction, o.max_hermiticity_correction);
  cum_hermiticity_correction += o.cum_hermiticity_correction;
  max_trace_correction = std::max(max_trace_correction, o.max_trace_correction);
  cum_trace_correction += o.cum_trace_correction;
  min_eigenvalue = std::min(min_eigenvalue, o.min_eigenvalue);
  max_basis_leakage = std::max(max_basis_leakage, o.max_basis_leakage);
  cum_basis_leakage += o.cum_basis_leakage;
}

DensityMatrix pure_state(const GeneratorContext& ctx, const Vec& coeffs) {
  const int m = ctx.retained();
  if (coeffs.size() > m) throw std::invalid_argument("pure_state: too many coefficients");
  Vec psi = Vec::Zero(m);
  psi.head(coeffs.size()) = coeffs;
  const double n = psi.norm();
  if (n == 0) throw std::invalid_argument("pure_state: zero vector");
  psi /= n;
  return DensityMatrix{ctx.basis_uid, psi * psi.adjoint()};
}

Complex expectation(const GeneratorContext& ctx, const DensityMatrix& rho, const Mat& op) {
  if (rho.basis_uid != ctx.basis_uid)
    throw std::invalid_argument("expectation: basis mismatch");
  if (op.rows() != rho.rho.rows() || op.cols() != rho.rho.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  return (rho.rho * op).trace();
}

double expectation_real(const GeneratorContext& ctx, const DensityMatrix& rho, const Mat& op) {
  const Complex v = expectation(ctx, rho, op);
  if (std::abs(v.imag()) > 1e-10)
    throw std::runtime_error("expectation_real: imaginary residue " +
                             std::to_string(v.imag()));
  return v.real();
}

Mat project_operator(const GeneratorContext& ctx, const Mat& full) {
  if (full.rows() != ctx.basis.rows())
    throw std::invalid_argument("project_operator: dimension mismatch");
  return ctx.basis.adjoint() * full * ctx.basis;
}

double stability_dt_limit(const GeneratorContext& ctx) {
  const double center = 0.5 * (ctx.energies.minCoeff() + ctx.energies.maxCoeff());
  const double radius = (ctx.energies.array() - center).abs().maxCoeff();
  return 0.1 / std::max(radius, 1e-12);
}

Trajectory evolve(const DensityMatrix& rho0, const GeneratorContext& ctx,
                  const std::vector<double>& t_grid, double dt) {
  if (rho0.basis_uid != ctx.basis_uid) throw std::invalid_argument("evolve: basis mismatch");
  if (dt <= 0) throw std::invalid_argument("evolve: dt must be > 0");
  const double limit = stability_dt_limit(ctx);
  if (dt > limit)
    throw std::invalid_argument("evolve: dt " + std::to_string(dt) +
                                " violates stability bound " + std::to_string(limit));
  for (size_t i = 0; i + 1 < t_grid.size(); ++i)
    if (t_grid[i + 1] <= t_grid[i]) throw std::invalid_argument("evolve: t_grid must ascend");
  if (!t_grid.empty() && t_grid.front() < 0)
    throw std::invalid_argument("evolve: negative time");

  Trajectory out;
  out.stats.dt = dt;
  out.stats.min_eigenvalue = 1.0;
  Mat rho = rho0.rho;
  Rk4Workspace w;
  w.resize(ctx.retained());

  double t = 0;
  for (double target : t_grid) {
    const double span = target - t;
    if (span > 0) {
      const long n = std::max<long>(1, long(std::ceil(span / dt - 1e-12)));
      const double h = span / double(n);
      for (long s = 0; s < n; ++s) rk4_step(ctx, rho, h, w, out.stats);
      t = target;
    }
    out.times.push_back(target);
    out.states.push_back(DensityMatrix{ctx.basis_uid, rho});
    check_negativity(rho, out.stats);
  }
  return out;
}

double Schedule::value(double t) const {
  if (kind == Kind::Omega0Trajectory) {
    if (t <= 0 || t >= duration) return omega0_high;
    const double x = t / duration;
    return x <= 0.5 ? omega0_high + (omega0_low - omega0_high) * (2 * x)
                    : omega0_low + (omega0_high - omega0_low) * (2 * x - 1);
  }
  if (t <= 0 || t >= duration) return 0.0;
  const double tr = duration / 4;
  if (t < tr) {
    const double s = std::sin(0.5 * M_PI * t / tr);
    return amplitude * s * s;
  }
  if (t <= 3 * tr) return amplitude;
  const double s = std::sin(0.5 * M_PI * (duration - t) / tr);
  return amplitude * s * s;
}

GeneratorSchedule build_generator_schedule(const ScheduledSystem& sys, double duration,
                                           double recompute_interval, double dt_cap) {
  if (duration <= 0) throw std::invalid_argument("schedule: duration must be > 0");
  if (recompute_interval <= 0)
    throw std::invalid_argument("schedule: recompute_interval must be > 0");

  GeneratorSchedule sched;
  const long k = std::max<long>(1, llround(duration / recompute_interval));
  sched.segment_length = duration / double(k);

  auto context_at = [&](double t) {
    const Mat h = sys.hamiltonian_at(t);
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("schedule: eigensolver failed at t=" + std::to_string(t));
    const int m = std::min<int>(sys.retained, int(h.rows()));
    return build_relaxation_operators(es.eigenvalues().head(m),
                                      es.eigenvectors().leftCols(m), sys.channels, sys.kernel);
  };

  sched.initial = context_at(0.0);
  sched.final_ctx = context_at(duration);
  sched.segments.reserve(k);
  double dt = dt_cap;
  for (long i = 0; i < k; ++i) {
    sched.segments.push_back(context_at((double(i) + 0.5) * sched.segment_length));
    dt = std::min(dt, stability_dt_limit(sched.segments.back()));
  }
  sched.dt = dt;

  sched.hops.reserve(k + 1);
  sched.hops.push_back(sched.segments.front().basis.adjoint() * sched.initial.basis);
  for (long i = 0; i + 1 < k; ++i)
    sched.hops.push_back(sched.segments[i + 1].basis.adjoint() * sched.segments[i].basis);
  sched.hops.push_back(sched.final_ctx.basis.adjoint() * sched.segments.back().basis);
  return sched;
}

ScheduledResult evolve_through(const GeneratorSchedule& sched,
                               const std::vector<DensityMatrix>& rho0s) {
  ScheduledResult out;
  out.stats.dt = sched.dt;
  out.stats.min_eigenvalue = 1.0;

  std::vector<Mat> rhos;
  rhos.reserve(rho0s.size());
  for (const DensityMatrix& r : rho0s) {
    if (r.basis_uid != sched.initial.basis_uid)
      throw std::invalid_argument("evolve_through: state not in the schedule's initial basis");
    rhos.push_back(r.rho);
  }

  auto hop = [&](const Mat& q) {
    for (Mat& rho : rhos) {
      rho = (q * rho * q.adjoint()).eval();
      const double tr = rho.trace().real();
      const double leak = std::abs(1.0 - tr);
      out.stats.max_basis_leakage = std::max(out.stats.max_basis_leakage, leak);
      out.stats.cum_basis_leakage += leak;
      if (leak > kLeakageTol)
        throw std::runtime_error("evolve_through: basis-transform overlap deficiency " +
                                 std::to_string(leak) + " (retained subspaces drifted apart)");
      rho /= tr;
      rho = 0.5 * (rho + rho.adjoint()).eval();
    }
  };

  const long n_steps = std::max<long>(1, long(std::ceil(sched.segment_length / sched.dt - 1e-12)));
  const double h = sched.segment_length / double(n_steps);
  Rk4Workspace w;
  for (size_t i = 0; i < sched.segments.size(); ++i) {
    hop(sched.hops[i]);
    const GeneratorContext& ctx = sched.segments[i];
    w.resize(ctx.retained());
    for (Mat& rho : rhos)
      for (long s = 0; s < n_steps; ++s) rk4_step(ctx, rho, h, w, out.stats);
  }
  hop(sched.hops.back());

  out.finals.reserve(rhos.size());
  for (Mat& rho : rhos) {
    check_negativity(rho, out.stats);
    out.finals.push_back(DensityMatrix{sched.final_ctx.basis_uid, std::move(rho)});
  }
  return out;
}

Trajectory evolve_scheduled(const DensityMatrix& rho0, const SystemParams& params,
                            const Schedule& schedule, const std::vector<NoiseChannel>& channels,
                            double recompute_interval, double dt_cap, int retained,
                            const KernelOptions& kernel) {
  ScheduledSystem sys;
  sys.channels = channels;
  sys.retained = retained;
  sys.kernel = kernel;
  if (schedule.kind == Schedule::Kind::Omega0Trajectory) {
    sys.hamiltonian_at = [params, schedule](double t) {
      SystemParams p = params;
      p.omega0 = schedule.value(t);
      return build_dicke(p).matrix;
    };
  } else if (schedule.kind == Schedule::Kind::XAmplitude) {
    const Mat h0 = build_dicke(params).matrix;
    const Mat sx = embed(pauli(Axis::X), Slot::atom(1, 1), params.layout()).matrix;
    sys.hamiltonian_at = [h0, sx, schedule](double t) -> Mat {
      return h0 + schedule.value(t) * sx;
    };
  } else {
    throw std::invalid_argument("evolve_scheduled: two-resonator schedules need the product-basis path");
  }

  // Segment-boundary snapshots: re-run segment by segment so intermediate
  // states are reported in their instantaneous basis.
  GeneratorSchedule sched = build_generator_schedule(sys, schedule.duration, recompute_interval, dt_cap);

  Trajectory out;
  out.stats.dt = sched.dt;
  out.stats.min_eigenvalue = 1.0;
  if (rho0.basis_uid != sched.initial.basis_uid)
    throw std::invalid_argument("evolve_scheduled: state not in the initial basis");

  Mat rho = rho0.rho;
  const long n_steps = std::max<long>(1, long(std::ceil(sched.segment_length / sched.dt - 1e-12)));
  const double h = sched.segment_length / double(n_steps);
  Rk4Workspace w;
  auto hop = [&](const Mat& q) {
    rho = (q * rho * q.adjoint()).eval();
    const double tr = rho.trace().real();
    const double leak = std::abs(1.0 - tr);
    out.stats.max_basis_leakage = std::max(out.stats.max_basis_leakage, leak);
    out.stats.cum_basis_leakage += leak;
    if (leak > kLeakageTol)
      throw std::runtime_error("evolve_scheduled: basis-transform overlap deficiency " +
                               std::to_string(leak));
    rho /= tr;
    rho = 0.5 * (rho + rho.adjoint()).eval();
  };

  out.times.push_back(0.0);
  out.states.push_back(rho0);
  for (size_t i = 0; i < sched.segments.size(); ++i) {
    hop(sched.hops[i]);
    const GeneratorContext& ctx = sched.segments[i];
    w.resize(ctx.retained());
    for (long s = 0; s < n_steps; ++s) rk4_step(ctx, rho, h, w, out.stats);
    if (i + 1 < sched.segments.size()) {
      out.times.push_back(double(i + 1) * sched.segment_length);
      out.states.push_back(DensityMatrix{ctx.basis_uid, rho});
    }
  }
  hop(sched.hops.back());
  check_negativity(rho, out.stats);
  out.times.push_back(schedule.duration);
  out.states.push_back(DensityMatrix{sched.final_ctx.basis_uid, rho});
  return out;
}

GeneratorModes decompose_generator(const GeneratorContext& ctx) {
  const Mat l = superoperator(ctx);
  GeneratorModes modes;
  Eigen::ComplexEigenSolver<Mat> es(l);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("decompose_generator: eigensolver failed");
  modes.eigenvalues = es.eigenvalues();
  modes.vectors = es.eigenvectors();
  modes.lu = Eigen::PartialPivLU<Mat>(modes.vectors);

  // Probe-vector reconstruction check; a large residual means the modal
  // expansion cannot be trusted (defective or ill-conditioned L).
  std::mt19937 rng(12345);
  std::normal_distribution<double> g;
  double worst = 0;
  for (int probe = 0; probe < 3; ++probe) {
    Vec x(l.rows());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = Complex(g(rng), g(rng));
    const Vec lx = l * x;
    const Vec rec = modes.vectors * (modes.eigenvalues.asDiagonal() * modes.lu.solve(x));
    worst = std::max(worst, (lx - rec).norm() / std::max(lx.norm(), 1e-300));
  }
  modes.residual = worst;
  if (worst > 1e-7)
    throw std::runtime_error("decompose_generator: modal reconstruction residual " +
                             std::to_string(worst));
  return modes;
}

Eigen::VectorXcd element_modes(const GeneratorModes& modes, const Mat& rho0, int row, int col) {
  const int m = int(rho0.rows());
  const Eigen::Map<const Vec> v(rho0.data(), rho0.size());
  const Vec x = modes.lu.solve(v);
  const long idx = long(col) * m + row;
  return modes.vectors.row(idx).transpose().cwiseProduct(x);
}

Complex eval_modes(const Eigen::VectorXcd& amplitudes, const Eigen::VectorXcd& eigenvalues,
                   double t) {
  Complex sum = 0;
  for (Eigen::Index k = 0; k < amplitudes.size(); ++k) {
    const Complex a = amplitudes(k);
    if (std::abs(a) < 1e-300) continue;
    const Complex z = eigenvalues(k) * t;
    sum += a * std::exp(Complex(std::min(z.real(), 40.0), z.imag()));
  }
  return sum;
}

Mat propagate_modes(const GeneratorModes& modes, const Mat& rho0, double t) {
  const int m = int(rho0.rows());
  const Eigen::Map<const Vec> v(rho0.data(), rho0.size());
  Vec x = modes.lu.solve(v);
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const Complex z = modes.eigenvalues(k) * t;
    x(k) *= std::exp(Complex(std::min(z.real(), 40.0), z.imag()));
  }
  const Vec out = modes.vectors * x;
  return Eigen::Map<const Mat>(out.data(), m, m);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const GeneratorContext& ctx,
                          const std::vector<std::pair<std::string, Mat>>& observables) {
  CsvWriter csv;
  std::vector<std::string> cols = {"t"};
  for (const auto& [name, op] : observables) cols.push_back(name);
  cols.insert(cols.end(), {"coherence_01", "trace_error", "min_eigenvalue"});
  csv.header(cols);

  for (size_t i = 0; i < traj.states.size(); ++i) {
    const DensityMatrix& s = traj.states[i];
    std::vector<double> fields = {traj.times[i]};
    for (const auto& [name, op] : observables) {
      (void)name;
      if (s.basis_uid != ctx.basis_uid)
        throw std::invalid_argument("write_trajectory_csv: snapshot basis mismatch");
      fields.push_back((s.rho * op).trace().real());
    }
    fields.push_back(std::abs(s.rho(0, 1)));
    fields.push_back(std::abs(s.rho.trace() - Complex(1, 0)));
    Eigen::SelfAdjointEigenSolver<Mat> es(s.rho, Eigen::EigenvaluesOnly);
    fields.push_back(es.eigenvalues().minCoeff());
    csv.row_numbers(fields);
  }
  os << csv.text();
}

} // namespace catqed
