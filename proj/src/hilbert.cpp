#include "catqed/hilbert.hpp"

#include <cmath>

namespace catqed {

void SpaceLayout::validate() const {
  if (n_max < 1) throw std::invalid_argument("SpaceLayout: n_max must be >= 1");
  if (n_atoms < 1) throw std::invalid_argument("SpaceLayout: n_atoms must be >= 1");
  if (n_resonators != 1 && n_resonators != 2)
    throw std::invalid_argument("SpaceLayout: n_resonators must be 1 or 2");
}

double hermiticity_defect(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat annihilation(int n_max) {
  if (n_max < 1) throw std::invalid_argument("annihilation: n_max must be >= 1");
  Mat a = Mat::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Mat pauli(Axis axis) {
  Mat m = Mat::Zero(2, 2);
  switch (axis) {
    case Axis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Axis::Y:
      m(0, 1) = Complex(0, 1);
      m(1, 0) = Complex(0, -1);
      break;
    case Axis::Z:
      m(0, 0) = -1.0;
      m(1, 1) = 1.0;
      break;
  }
  return m;
}

Operator embed(const Mat& sub, Slot slot, const SpaceLayout& layout) {
  layout.validate();
  if (slot.resonator < 1 || slot.resonator > layout.n_resonators)
    throw std::invalid_argument("embed: invalid resonator index");
  if (slot.index < 0 || slot.index > layout.n_atoms)
    throw std::invalid_argument("embed: invalid subsystem index");
  const int sub_dim = slot.index == 0 ? layout.fock_dim() : 2;
  if (sub.rows() != sub_dim || sub.cols() != sub_dim)
    throw std::invalid_argument("embed: operator dimension does not match slot");

  // Walk the subsystem chain in basis order, inserting `sub` at its slot.
  Mat acc = Mat::Identity(1, 1);
  for (int r = 1; r <= layout.n_resonators; ++r) {
    for (int k = 0; k <= layout.n_atoms; ++k) {
      const int d = k == 0 ? layout.fock_dim() : 2;
      if (r == slot.resonator && k == slot.index)
        acc = kron(acc, sub);
      else
        acc = kron(acc, Mat::Identity(d, d));
    }
  }
  return Operator(layout, std::move(acc));
}

CoherentState coherent_state(Complex alpha, int n_max) {
  if (n_max < 1) throw std::invalid_argument("coherent_state: n_max must be >= 1");
  Vec c(n_max + 1);
  // c_n = alpha^n / sqrt(n!) up to normalization; build recursively to avoid
  // overflow in n! at large cutoffs.
  c(0) = 1.0;
  for (int n = 1; n <= n_max; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  const double kept = c.squaredNorm() * std::exp(-std::norm(alpha));
  CoherentState out;
  out.truncated_weight = std::max(0.0, 1.0 - kept);
  out.warn = out.truncated_weight > 1e-6;
  c /= c.norm();
  out.amplitudes = std::move(c);
  return out;
}

} // namespace catqed
