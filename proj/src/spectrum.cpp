#include "catqed/spectrum.hpp"

#include <cmath>

namespace catqed {

namespace {

void fix_phase(Eigen::Ref<Vec> v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > best + 1e-15) {
      best = m;
      imax = i;
    }
  }
  if (best <= 0) return;
  v *= std::conj(v(imax)) / best;
  v(imax) = Complex(std::abs(v(imax)), 0.0); // scrub the rounding residue
}

} // namespace

SpectrumResult diagonalize(const Operator& h, int retain) {
  const double scale = std::max(1.0, h.matrix.cwiseAbs().maxCoeff());
  if (hermiticity_defect(h.matrix) > 1e-10 * scale)
    throw std::invalid_argument("diagonalize: input is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Mat> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed to converge");

  const int dim = int(h.matrix.rows());
  const int k = retain < 0 ? dim : std::min(retain, dim);
  SpectrumResult out;
  out.layout = h.layout;
  out.eigenvalues = solver.eigenvalues().head(k);
  out.eigenvectors = solver.eigenvectors().leftCols(k);
  for (int i = 0; i < k; ++i) fix_phase(out.eigenvectors.col(i));
  return out;
}

double eigen_residual(const Operator& h, const SpectrumResult& s) {
  double worst = 0;
  for (int k = 0; k < s.retained(); ++k) {
    const double r = (h.matrix * s.eigenvectors.col(k) -
                      s.eigenvalues(k) * s.eigenvectors.col(k)).norm();
    worst = std::max(worst, r);
  }
  return worst;
}

double orthonormality_defect(const SpectrumResult& s) {
  const Mat g = s.eigenvectors.adjoint() * s.eigenvectors;
  return (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

Vec doublet_ansatz(const SystemParams& params, int sign) {
  const SpaceLayout lay = params.layout();
  const Complex alpha =
      Complex(0, 1) * std::sqrt(double(params.n_atoms)) * params.omega0 / params.omega_cav;
  const Vec plus_ph = coherent_state(alpha, params.n_max).amplitudes;
  const Vec minus_ph = coherent_state(-alpha, params.n_max).amplitudes;

  Vec spin_plus(1), spin_minus(1);
  spin_plus(0) = 1.0;
  spin_minus(0) = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec up2(2), dn2(2);
  up2 << inv_sqrt2, inv_sqrt2;   // |+> = (|e> + |g>)/sqrt(2), basis order (g, e)
  dn2 << -inv_sqrt2, inv_sqrt2;  // |-> = (|e> - |g>)/sqrt(2)
  for (int j = 0; j < params.n_atoms; ++j) {
    spin_plus = kron(spin_plus, up2);
    spin_minus = kron(spin_minus, dn2);
  }

  const double par = params.n_atoms % 2 == 0 ? 1.0 : -1.0; // (-1)^N
  Vec psi = kron(plus_ph, spin_plus) + double(sign) * par * kron(minus_ph, spin_minus);
  psi /= psi.norm();
  if (long(psi.size()) != lay.dim()) throw std::logic_error("doublet_ansatz: dimension bug");
  return psi;
}

VacuumDoublet vacuum_doublet(const SpectrumResult& spec, const SystemParams& params) {
  if (spec.retained() < 3)
    throw std::invalid_argument("vacuum_doublet: need at least 3 retained eigenpairs");

  VacuumDoublet d;
  d.layout = spec.layout;
  d.psi_G = spec.eigenvectors.col(0);
  d.psi_E = spec.eigenvectors.col(1);
  d.delta = spec.eigenvalues(1) - spec.eigenvalues(0);
  d.gap = spec.eigenvalues(2) - spec.eigenvalues(1);
  d.regime_ok = d.gap >= 10.0 * std::max(d.delta, 1e-300);

  const Mat num = embed(Mat(annihilation(params.n_max).adjoint() * annihilation(params.n_max)),
                        Slot::photon(), spec.layout).matrix;
  d.mean_photons = (d.psi_G.adjoint() * num * d.psi_G)(0).real();

  const Vec ans_g = doublet_ansatz(params, +1);
  const Vec ans_e = doublet_ansatz(params, -1);
  d.ansatz_fidelity_G = std::norm((ans_g.adjoint() * d.psi_G)(0));
  d.ansatz_fidelity_E = std::norm((ans_e.adjoint() * d.psi_E)(0));
  return d;
}

std::vector<SplittingRow> splitting_curve(const SystemParams& base,
                                          const std::vector<double>& omega0_grid,
                                          double rel_tol) {
  std::vector<SplittingRow> rows;
  rows.reserve(omega0_grid.size());
  for (double w0 : omega0_grid) {
    SystemParams p = base;
    p.omega0 = w0;
    SystemParams p2 = p;
    p2.n_max = 2 * p.n_max;

    const SpectrumResult s = diagonalize(build_dicke(p), -1);
    const SpectrumResult s2 = diagonalize(build_dicke(p2), 2);
    const VacuumDoublet d = vacuum_doublet(s, p);

    SplittingRow row;
    row.omega0 = w0;
    row.delta = s.eigenvalues(1) - s.eigenvalues(0);
    row.delta_check = s2.eigenvalues(1) - s2.eigenvalues(0);
    row.gap = d.gap;
    row.n_photons = d.mean_photons;
    row.ansatz_fidelity_G = d.ansatz_fidelity_G;
    row.converged = std::abs(row.delta - row.delta_check) <=
                    rel_tol * std::max(std::abs(row.delta_check), 1e-300);
    rows.push_back(row);
  }
  return rows;
}

Eigen::Matrix2cd perturbation_block(const VacuumDoublet& doublet, const Operator& v) {
  if (!(v.layout == doublet.layout))
    throw std::invalid_argument("perturbation_block: layout mismatch");
  Eigen::Matrix2cd m;
  const Vec vg = v.matrix * doublet.psi_G;
  const Vec ve = v.matrix * doublet.psi_E;
  m(0, 0) = doublet.psi_G.dot(vg);
  m(0, 1) = doublet.psi_G.dot(ve);
  m(1, 0) = doublet.psi_E.dot(vg);
  m(1, 1) = doublet.psi_E.dot(ve);
  return m;
}

} // namespace catqed
