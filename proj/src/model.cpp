#include "catqed/model.hpp"

#include <cmath>

namespace catqed {

void SystemParams::validate() const {
  if (omega0 < 0) throw std::invalid_argument("SystemParams: omega0 must be >= 0");
  if (omega_cav <= 0) throw std::invalid_argument("SystemParams: omega_cav must be > 0");
  if (omega_eg <= 0) throw std::invalid_argument("SystemParams: omega_eg must be > 0");
  layout().validate();
}

Operator build_dicke(const SystemParams& params) {
  params.validate();
  const SpaceLayout lay = params.layout();
  const Mat a = annihilation(params.n_max);
  const Mat quad = Complex(0, 1) * (a - a.adjoint()); // i(a - a^dag), Hermitian

  Mat h = params.omega_cav * embed(Mat(a.adjoint() * a), Slot::photon(), lay).matrix;
  const double g = params.omega0 / std::sqrt(double(params.n_atoms));
  for (int j = 1; j <= params.n_atoms; ++j) {
    h += 0.5 * params.omega_eg * embed(pauli(Axis::Z), Slot::atom(j), lay).matrix;
    h += g * (embed(quad, Slot::photon(), lay).matrix *
              embed(pauli(Axis::X), Slot::atom(j), lay).matrix);
  }
  return Operator(lay, std::move(h));
}

Operator parity(const SpaceLayout& layout) {
  layout.validate();
  if (layout.n_resonators != 1)
    throw std::invalid_argument("parity: single-resonator layouts only");
  Mat ph = Mat::Zero(layout.fock_dim(), layout.fock_dim());
  for (int n = 0; n < layout.fock_dim(); ++n) ph(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  Mat pi = embed(ph, Slot::photon(), layout).matrix;
  for (int j = 1; j <= layout.n_atoms; ++j)
    pi = pi * embed(pauli(Axis::Z), Slot::atom(j), layout).matrix;
  return Operator(layout, std::move(pi));
}

Operator build_static_perturbation(const PerturbationParams& p, const SpaceLayout& layout) {
  layout.validate();
  const size_t n = size_t(layout.n_atoms);
  if (p.h_x.size() != n || p.h_y.size() != n || p.h_z.size() != n)
    throw std::invalid_argument("build_static_perturbation: amplitude arrays must have n_atoms entries");

  Mat h = Mat::Zero(layout.dim(), layout.dim());
  for (int j = 1; j <= layout.n_atoms; ++j) {
    if (p.h_x[j - 1] != 0) h += p.h_x[j - 1] * embed(pauli(Axis::X), Slot::atom(j), layout).matrix;
    if (p.h_y[j - 1] != 0) h += p.h_y[j - 1] * embed(pauli(Axis::Y), Slot::atom(j), layout).matrix;
    if (p.h_z[j - 1] != 0) h += p.h_z[j - 1] * embed(pauli(Axis::Z), Slot::atom(j), layout).matrix;
  }
  if (p.h_a != 0.0) {
    const Mat a = annihilation(layout.n_max);
    h += embed(Mat(p.h_a * a + std::conj(p.h_a) * a.adjoint()), Slot::photon(), layout).matrix;
  }
  return Operator(layout, std::move(h));
}

Operator build_control_x(double c_amp, int atom, const SpaceLayout& layout) {
  layout.validate();
  if (atom < 1 || atom > layout.n_atoms)
    throw std::invalid_argument("build_control_x: invalid atom index");
  return Operator(layout, Mat(c_amp * embed(pauli(Axis::X), Slot::atom(atom), layout).matrix));
}

Operator build_two_resonator(const SystemParams& p1, const SystemParams& p2, double c12,
                             long dim_ceiling) {
  p1.validate();
  p2.validate();
  const SpaceLayout lay{p1.n_max, p1.n_atoms, 2};
  if (p2.n_max != p1.n_max || p2.n_atoms != p1.n_atoms)
    throw std::invalid_argument("build_two_resonator: resonators must share a layout shape");
  if (lay.dim() > dim_ceiling)
    throw std::invalid_argument("build_two_resonator: composite dimension " +
                                std::to_string(lay.dim()) + " exceeds ceiling " +
                                std::to_string(dim_ceiling));

  const long d = lay.resonator_dim();
  const Mat id = Mat::Identity(d, d);
  Mat h = kron(build_dicke(p1).matrix, id) + kron(id, build_dicke(p2).matrix);
  if (c12 != 0.0) {
    h += c12 * (embed(pauli(Axis::X), Slot::atom(1, 1), lay).matrix *
                embed(pauli(Axis::X), Slot::atom(1, 2), lay).matrix);
  }
  return Operator(lay, std::move(h));
}

} // namespace catqed
