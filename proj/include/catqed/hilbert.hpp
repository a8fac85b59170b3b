#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

// Operator algebra on truncated Fock and pseudo-spin spaces: constructors,
// tensor products, subsystem embeddings. Everything is dense complex and
// immutable after construction; all functions here are pure.
//
// Basis ordering convention (fixed so matrix dumps are reproducible):
// photon-major, atoms ascending, resonator 1 before resonator 2, i.e. the
// full space is
//   (photon_1 x atom_1 ... atom_N) x (photon_2 x atom_1 ... atom_N)
// with kron(A, B) putting A's index in the most significant position.
// Single-atom basis order is (g, e), index 0 = ground.

namespace catqed {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct SpaceLayout {
  int n_max = 1;        // photon-number cutoff; Fock dimension = n_max + 1
  int n_atoms = 1;      // two-level atoms per resonator
  int n_resonators = 1; // 1 or 2

  int fock_dim() const { return n_max + 1; }
  int spin_dim() const { return 1 << n_atoms; }
  long resonator_dim() const { return long(fock_dim()) * spin_dim(); }
  long dim() const {
    long d = resonator_dim();
    return n_resonators == 2 ? d * d : d;
  }

  void validate() const;
  bool operator==(const SpaceLayout&) const = default;
};

// Dense complex square matrix tagged with the layout it acts on.
struct Operator {
  SpaceLayout layout;
  Mat matrix;

  Operator() = default;
  Operator(SpaceLayout lay, Mat m) : layout(lay), matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols() || matrix.rows() != layout.dim())
      throw std::invalid_argument("Operator: matrix dimension does not match layout");
  }
};

struct StateVector {
  SpaceLayout layout;
  Vec amplitudes;
};

// max-norm of A - A^dag; builders guarantee <= 1e-12 for Hermitian claims
double hermiticity_defect(const Mat& a);

// Kronecker product, row-major ordering as described above.
Mat kron(const Mat& a, const Mat& b);

// Bosonic annihilation operator on the truncated Fock space,
// <n-1|a|n> = sqrt(n); the top level has no outgoing element (hard cutoff).
Mat annihilation(int n_max);

enum class Axis { X, Y, Z };

// 2x2 Pauli matrices in the (g, e) basis:
//   sigma_x = |e><g| + |g><e|,  sigma_y = i(|g><e| - |e><g|),
//   sigma_z = 2|e><e| - 1.
Mat pauli(Axis axis);

// Address of one subsystem: the photon mode or atom j (1-based) of a resonator.
struct Slot {
  int resonator = 1; // 1 or 2
  int index = 0;     // 0 = photon mode, 1..N = atom index

  static Slot photon(int resonator = 1) { return {resonator, 0}; }
  static Slot atom(int j, int resonator = 1) { return {resonator, j}; }
};

// Embed a subsystem operator into the full space (identity on all other
// subsystems). The subsystem dimension must match the slot.
Operator embed(const Mat& sub, Slot slot, const SpaceLayout& layout);

// Coherent state |alpha> on the truncated Fock space, renormalized after the
// cutoff. The amplitudes span the photon factor only; tensor with spin states
// to build full-space vectors. truncated_weight is the probability lost to
// the cutoff before renormalization; warn is set when it exceeds 1e-6.
struct CoherentState {
  Vec amplitudes;
  double truncated_weight = 0.0;
  bool warn = false;
};

CoherentState coherent_state(Complex alpha, int n_max);

} // namespace catqed
