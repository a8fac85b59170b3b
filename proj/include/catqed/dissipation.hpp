#pragma once

#include "catqed/spectrum.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Colored-noise master-equation generator at zero temperature:
//
//   drho/dt = -i[H, rho] + sum_k ( U_k rho S_k + S_k rho U_k^dag
//                                  - S_k U_k rho - rho U_k^dag S_k )
//
// with Hermitian jump operators S_k and relaxation operators U_k obtained in
// the retained eigenbasis as (U_k)_mn = (S_k)_mn * W(E_m - E_n), where W is
// the half-range Fourier transform of the bath correlation function for a
// flat spectral density Gamma_k on [0, omega_c].
//
// No secular approximation is made, so positivity of rho is not guaranteed;
// the dynamics module monitors negative-eigenvalue excursions instead of
// clipping them.

namespace catqed {

struct KernelOptions {
  // The principal-value (Lamb-shift) part defaults off: near-degenerate
  // doublets make the logarithm large and it only renormalizes energies.
  bool include_lamb = false;
  double epsilon = 1e-8; // regularizer inside the logarithms

  // Weight of the delta function sitting exactly on the flat band's edge
  // (omega = 0 or omega = -omega_c). The edge of the band makes this
  // genuinely convention-dependent, so it is configurable.
  enum class EdgeWeight { Zero, Half, Full };
  EdgeWeight edge = EdgeWeight::Half;
};

// W(omega) = int_0^inf dtau e^{-i omega tau} nu(tau),
// nu(tau) = int_0^{omega_c} Gamma e^{-i omega' tau} domega'.
// Closed form: Re W = pi*Gamma inside (-omega_c, 0) with the configured edge
// weight at the boundaries; Im W = Gamma*ln(|omega|+eps)
//                                  - Gamma*ln(|omega_c+omega|+eps) when
// include_lamb, else 0.
Complex half_fourier_kernel(double omega, double rate, double cutoff,
                            const KernelOptions& opts = {});

// A noise bath attached through a Hermitian jump operator.
struct NoiseChannel {
  std::string label;
  Mat jump;      // full-space Hermitian matrix
  double rate;   // Gamma_k >= 0
  double cutoff; // omega_c > 0
};

// Uniform per-kind rates, the configuration the experiments use: one pair of
// quadrature channels per resonator (rate r), per-atom Pauli channels
// (rates x, y, z), and the mutual-coupling channel x12 on two-resonator
// layouts.
struct NoiseRates {
  double r = 0, x = 0, y = 0, z = 0, x12 = 0;
};

// Complete channel list for a layout; zero-rate channels are omitted.
// Requesting x12 on a single-resonator layout is an error.
std::vector<NoiseChannel> build_jump_set(const SpaceLayout& layout, const NoiseRates& rates,
                                         double cutoff);

struct ChannelOps {
  std::string label;
  double rate = 0;
  double cutoff = 0;
  Mat S;  // jump operator in the retained eigenbasis, M x M
  Mat U;  // relaxation operator, same sparsity pattern as S
  Mat SU; // cached product S * U
};

struct GeneratorContext {
  std::uint64_t basis_uid = 0;  // identifies the retained basis; density
                                // matrices carry the same tag
  Eigen::VectorXd energies;     // retained eigenvalues, ascending
  Mat basis;                    // ambient_dim x M eigenvector columns
  std::vector<ChannelOps> channels;
  KernelOptions kernel;

  int retained() const { return int(energies.size()); }
};

// Project the jump operators onto the retained eigenbasis of `spec` and build
// the relaxation operators. Requires at least 3 retained levels.
GeneratorContext build_relaxation_operators(const SpectrumResult& spec,
                                            const std::vector<NoiseChannel>& channels,
                                            const KernelOptions& opts = {});

// Same, from a raw (energies, basis) pair; used when the ambient space is
// itself a truncated product basis rather than a full tensor layout.
GeneratorContext build_relaxation_operators(const Eigen::VectorXd& energies, const Mat& basis,
                                            const std::vector<NoiseChannel>& channels,
                                            const KernelOptions& opts = {});

// Right-hand side of the master equation for rho in the retained basis.
// Faithful four-term form, valid for any rho.
Mat apply_generator(const GeneratorContext& ctx, const Mat& rho);

// Same result for Hermitian rho at roughly half the cost (the four dissipator
// terms collapse into an explicit adjoint pair).
Mat apply_generator_hermitian(const GeneratorContext& ctx, const Mat& rho);

// Dense superoperator acting on vec(rho), column-major. M^2 x M^2.
Mat superoperator(const GeneratorContext& ctx);

// Energy renormalization per retained level: the diagonal of the coherent
// (commutator-like) part of the dissipator, sum_k (S_k U_k - h.c.)/(2i).
// With include_lamb this is the Lamb shift proper.
Eigen::VectorXd lamb_shifts(const GeneratorContext& ctx);

// Text dump of the U_k matrices for cross-implementation diffing: per channel
// a '# channel ...' line followed by rows "m n re im" for nonzero entries.
void dump_relaxation_operators(const GeneratorContext& ctx, std::ostream& os);

} // namespace catqed
