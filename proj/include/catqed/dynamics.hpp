#pragma once

#include "catqed/dissipation.hpp"

#include <functional>
#include <iosfwd>
#include <optional>

// Time integration of the density matrix: fixed-step RK4 under a frozen
// generator, adiabatic-Redfield scheduled evolution under a time-dependent
// Hamiltonian (rebuild H, rediagonalize, rebuild U_k every recompute
// interval), and an exact spectral propagator for time-independent
// generators, used where the physical timescales (1/Gamma ~ 1e5..1e6) put
// step-by-step integration out of reach.

namespace catqed {

// Hermitian to 1e-10, trace within 1e-9 of 1; eigenvalue excursions below
// -1e-7 fail the run (Redfield tolerance, monitored rather than clipped).
struct DensityMatrix {
  std::uint64_t basis_uid = 0;
  Mat rho;
};

// Pure state |psi><psi| from coefficients in the retained eigenbasis.
// Coefficients beyond coeffs.size() are zero; the vector is normalized.
DensityMatrix pure_state(const GeneratorContext& ctx, const Vec& coeffs);

Complex expectation(const GeneratorContext& ctx, const DensityMatrix& rho, const Mat& op);
// Asserts the imaginary residue is <= 1e-10 (Hermitian observables).
double expectation_real(const GeneratorContext& ctx, const DensityMatrix& rho, const Mat& op);
// Project a full-space operator into the retained basis of ctx.
Mat project_operator(const GeneratorContext& ctx, const Mat& full);

struct EvolveStats {
  long steps = 0;
  double dt = 0;
  double max_hermiticity_correction = 0;
  double cum_hermiticity_correction = 0;
  double max_trace_correction = 0;
  double cum_trace_correction = 0;
  double min_eigenvalue = 0;        // worst excursion seen at snapshots
  double max_basis_leakage = 0;     // scheduled runs: per-transform weight loss
  double cum_basis_leakage = 0;

  void merge(const EvolveStats& other);
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  EvolveStats stats;
};

// RK4 stability bound for a frozen generator; evolve() rejects dt above it.
// Rotation frequencies depend only on energy differences, so the bound uses
// the spectrum recentred about its midpoint.
double stability_dt_limit(const GeneratorContext& ctx);

// Fixed-step RK4 under the frozen generator, states reported at the requested
// grid times (each inter-snapshot span is subdivided evenly with step <= dt).
// After every step rho is re-Hermitized and trace-renormalized with the
// corrections logged; correction magnitudes above 1e-9, or eigenvalue
// excursions below -1e-7 at snapshots, abort with diagnostics.
Trajectory evolve(const DensityMatrix& rho0, const GeneratorContext& ctx,
                  const std::vector<double>& t_grid, double dt);

// Control schedules. C pulses use a sine^2 ramp-up over T/4, plateau over
// T/2 and sine^2 ramp-down over T/4, so the unit-amplitude area is 3T/4 in
// closed form. The Omega0 trajectory is a linear descent high -> low and
// back (V shape).
struct Schedule {
  enum class Kind { XAmplitude, Omega0Trajectory, XXAmplitude };
  Kind kind = Kind::XAmplitude;
  double duration = 0;
  double amplitude = 0;   // plateau amplitude for C(t) pulses
  double omega0_high = 0; // Omega0 trajectory endpoints
  double omega0_low = 0;

  // Control value at time t: C(t) for amplitude pulses, Omega0(t) for the
  // trajectory kind.
  double value(double t) const;
  // Integral over [0, T] of the unit-amplitude pulse shape.
  static double unit_pulse_area(double duration) { return 0.75 * duration; }
};

// A time-dependent open system in a fixed ambient representation.
struct ScheduledSystem {
  std::function<Mat(double)> hamiltonian_at;
  std::vector<NoiseChannel> channels;
  int retained = 40;
  KernelOptions kernel;
};

// Frozen-generator segments of length recompute_interval, each sampled at its
// midpoint, plus the exact boundary contexts at t = 0 and t = duration used
// for state preparation and readout.
struct GeneratorSchedule {
  GeneratorContext initial;
  GeneratorContext final_ctx;
  std::vector<GeneratorContext> segments;
  std::vector<Mat> hops;   // hops[i]: basis of segment i -> segment i+1;
                           // hops.front(): initial -> segment 0;
                           // hops.back(): last segment -> final basis
  double segment_length = 0;
  double dt = 0;           // integration step satisfying every segment's bound
};

GeneratorSchedule build_generator_schedule(const ScheduledSystem& sys, double duration,
                                           double recompute_interval, double dt_cap);

// Integrate several initial states (given in the schedule's initial basis)
// through the same schedule; returns finals in the final basis. A basis
// transform losing more than 1e-6 of any state's trace aborts.
struct ScheduledResult {
  std::vector<DensityMatrix> finals;
  EvolveStats stats;
};

ScheduledResult evolve_through(const GeneratorSchedule& sched, const std::vector<DensityMatrix>& rho0s);

// Single-resonator convenience wrapper: builds H(t) from params and the
// schedule, evolves one state, reports snapshots at segment boundaries and
// the final time.
Trajectory evolve_scheduled(const DensityMatrix& rho0, const SystemParams& params,
                            const Schedule& schedule, const std::vector<NoiseChannel>& channels,
                            double recompute_interval, double dt_cap, int retained,
                            const KernelOptions& kernel = {});

// ---- exact propagation of a frozen generator ----------------------------

// Spectral decomposition of the superoperator L = V diag(lambda) V^{-1}.
struct GeneratorModes {
  Eigen::VectorXcd eigenvalues;
  Mat vectors;
  Eigen::PartialPivLU<Mat> lu; // LU of `vectors`
  double residual = 0;         // probe-vector reconstruction error
};

GeneratorModes decompose_generator(const GeneratorContext& ctx);

// Mode amplitudes of a single matrix element: rho(t)(row, col) =
// sum_k a_k exp(lambda_k t).
Eigen::VectorXcd element_modes(const GeneratorModes& modes, const Mat& rho0, int row, int col);

Complex eval_modes(const Eigen::VectorXcd& amplitudes, const Eigen::VectorXcd& eigenvalues,
                   double t);

// Full state at time t (used for cross-checks against evolve()).
Mat propagate_modes(const GeneratorModes& modes, const Mat& rho0, double t);

// Trajectory CSV: t, the named expectation values, |rho_01|, trace error and
// min eigenvalue per snapshot.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const GeneratorContext& ctx,
                          const std::vector<std::pair<std::string, Mat>>& observables);

} // namespace catqed
