#pragma once

#include "catqed/hilbert.hpp"

#include <vector>

// Hamiltonian builders for the non-RWA spin-boson (Dicke/Rabi) model, static
// perturbations, gate control terms, and the two-resonator composite.
//
// Units: omega_eg is the unit of energy and frequency (1/omega_eg the unit of
// time), hbar = 1. All parameters are ratios to omega_eg.

namespace catqed {

struct SystemParams {
  double omega_cav = 1.0; // cavity frequency
  double omega_eg = 1.0;  // atomic transition frequency (reference unit)
  double omega0 = 0.0;    // vacuum Rabi frequency
  int n_atoms = 1;
  int n_max = 40;

  SpaceLayout layout() const { return SpaceLayout{n_max, n_atoms, 1}; }
  void validate() const;
};

struct PerturbationParams {
  std::vector<double> h_x, h_y, h_z; // per-atom static amplitudes
  Complex h_a = 0.0;                 // resonator-field amplitude
};

// H = omega_cav a^dag a + (omega_eg/2) sum_j sigma_z^j
//     + sum_j i (Omega0/sqrt(N)) (a - a^dag) sigma_x^j
Operator build_dicke(const SystemParams& params);

// Parity of the total excitation number, Pi = (-1)^{a^dag a} prod_j sigma_z^j.
// Unitary, Hermitian, squares to the identity, commutes with build_dicke.
// Single-resonator layouts only.
Operator parity(const SpaceLayout& layout);

// sum_j (h_x,j sigma_x^j + h_y,j sigma_y^j + h_z,j sigma_z^j)
//   + (h_a a + conj(h_a) a^dag)
Operator build_static_perturbation(const PerturbationParams& p, const SpaceLayout& layout);

// c_amp * sigma_x^atom (atom is 1-based), the flux-drive gate control term.
Operator build_control_x(double c_amp, int atom, const SpaceLayout& layout);

// H_1 x 1 + 1 x H_2 + c12 * sigma_x(res 1, atom 1) sigma_x(res 2, atom 1).
// Rejects composite spaces above dim_ceiling: density-matrix propagation cost
// grows as dim^4 per step, so oversized requests fail early and loudly.
Operator build_two_resonator(const SystemParams& p1, const SystemParams& p2, double c12,
                             long dim_ceiling = 4096);

} // namespace catqed
