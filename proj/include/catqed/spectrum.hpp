#pragma once

#include "catqed/hilbert.hpp"
#include "catqed/model.hpp"

#include <vector>

// Hermitian eigendecomposition, identification of the vacuum doublet, and
// cat-state diagnostics: splitting delta, gap, mean photon number, fidelity
// against the coherent/polarized product ansatz, and 2x2 perturbation blocks.

namespace catqed {

struct SpectrumResult {
  SpaceLayout layout;
  Eigen::VectorXd eigenvalues; // ascending, k retained entries
  Mat eigenvectors;            // dim x k, orthonormal columns

  int retained() const { return int(eigenvalues.size()); }
};

// Dense Hermitian eigensolve. retain < 0 keeps everything, otherwise the
// lowest `retain` pairs. Eigenvector phases are fixed deterministically: the
// largest-magnitude component (lowest index on ties) is made real-positive.
// Throws on non-Hermitian input or solver failure.
SpectrumResult diagonalize(const Operator& h, int retain = -1);

// Test helpers for the eigensolve contracts.
double eigen_residual(const Operator& h, const SpectrumResult& s);   // max_k |H v_k - E_k v_k|_2
double orthonormality_defect(const SpectrumResult& s);               // max |V^dag V - I|

struct VacuumDoublet {
  SpaceLayout layout;
  Vec psi_G, psi_E;        // two lowest eigenvectors
  double delta = 0;        // E1 - E0
  double gap = 0;          // E2 - E1
  double mean_photons = 0; // <a^dag a> in psi_G
  double ansatz_fidelity_G = 0;
  double ansatz_fidelity_E = 0;
  bool regime_ok = false;  // gap/delta >= 10; below that the cat doublet is
                           // not yet formed and results are flagged, not fatal
};

// Asymptotic cat ansatz for the ground (sign = +1) or first excited
// (sign = -1) state:
//   (|alpha> |+..+>  +-  (-1)^N |-alpha> |-..->) / norm
// with alpha = i sqrt(N) Omega0 / omega_cav. The displacement is purely
// imaginary because the coupling enters as i(a - a^dag) sigma_x: the field
// is displaced along the p quadrature.
Vec doublet_ansatz(const SystemParams& params, int sign);

// Positional doublet extraction (two lowest states) plus diagnostics.
// Requires at least 3 retained eigenpairs.
VacuumDoublet vacuum_doublet(const SpectrumResult& spec, const SystemParams& params);

struct SplittingRow {
  double omega0 = 0;
  double delta = 0;       // at the requested n_max
  double delta_check = 0; // at doubled n_max
  double gap = 0;
  double n_photons = 0;
  double ansatz_fidelity_G = 0;
  bool converged = false; // |delta - delta_check| <= rel_tol * |delta_check|
};

// One row per Omega0 with a cutoff-doubling convergence check on delta.
std::vector<SplittingRow> splitting_curve(const SystemParams& base,
                                          const std::vector<double>& omega0_grid,
                                          double rel_tol = 0.01);

// M_ab = <psi_a| V |psi_b>, a,b in {G, E}. Hermitian 2x2 for Hermitian V.
Eigen::Matrix2cd perturbation_block(const VacuumDoublet& doublet, const Operator& v);

} // namespace catqed
