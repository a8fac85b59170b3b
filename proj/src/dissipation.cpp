#include "catqed/dissipation.hpp"

#include <atomic>
#include <cmath>
#include <ostream>

namespace catqed {

namespace {

std::atomic<std::uint64_t> g_basis_counter{1};

constexpr double kPi = 3.141592653589793238462643383279502884;

void append_resonator_channels(std::vector<NoiseChannel>& out, const SpaceLayout& layout,
                               int res, const NoiseRates& rates, double cutoff) {
  const std::string suffix = layout.n_resonators == 2 ? ":" + std::to_string(res) : "";
  const Mat a = annihilation(layout.n_max);
  if (rates.r > 0) {
    out.push_back({"r_v" + suffix, embed(Mat(a + a.adjoint()), Slot::photon(res), layout).matrix,
                   rates.r, cutoff});
    out.push_back({"r_f" + suffix,
                   embed(Mat(Complex(0, 1) * (a - a.adjoint())), Slot::photon(res), layout).matrix,
                   rates.r, cutoff});
  }
  for (int j = 1; j <= layout.n_atoms; ++j) {
    const std::string js = std::to_string(j);
    if (rates.x > 0)
      out.push_back({"x_" + js + suffix, embed(pauli(Axis::X), Slot::atom(j, res), layout).matrix,
                     rates.x, cutoff});
    if (rates.y > 0)
      out.push_back({"y_" + js + suffix, embed(pauli(Axis::Y), Slot::atom(j, res), layout).matrix,
                     rates.y, cutoff});
    if (rates.z > 0)
      out.push_back({"z_" + js + suffix, embed(pauli(Axis::Z), Slot::atom(j, res), layout).matrix,
                     rates.z, cutoff});
  }
}

} // namespace

Complex half_fourier_kernel(double omega, double rate, double cutoff,
                            const KernelOptions& opts) {
  if (cutoff <= 0) throw std::invalid_argument("half_fourier_kernel: cutoff must be > 0");
  double re = 0.0;
  if (omega == 0.0 || omega == -cutoff) {
    switch (opts.edge) {
      case KernelOptions::EdgeWeight::Zero: re = 0.0; break;
      case KernelOptions::EdgeWeight::Half: re = 0.5 * kPi * rate; break;
      case KernelOptions::EdgeWeight::Full: re = kPi * rate; break;
    }
  } else if (omega > -cutoff && omega < 0.0) {
    re = kPi * rate;
  }
  double im = 0.0;
  if (opts.include_lamb) {
    if (opts.epsilon <= 0)
      throw std::invalid_argument("half_fourier_kernel: epsilon must be > 0 with include_lamb");
    im = rate * (std::log(std::abs(omega) + opts.epsilon) -
                 std::log(std::abs(cutoff + omega) + opts.epsilon));
  }
  return {re, im};
}

std::vector<NoiseChannel> build_jump_set(const SpaceLayout& layout, const NoiseRates& rates,
                                         double cutoff) {
  layout.validate();
  if (cutoff <= 0) throw std::invalid_argument("build_jump_set: cutoff must be > 0");
  if (rates.r < 0 || rates.x < 0 || rates.y < 0 || rates.z < 0 || rates.x12 < 0)
    throw std::invalid_argument("build_jump_set: rates must be >= 0");
  if (rates.x12 > 0 && layout.n_resonators != 2)
    throw std::invalid_argument("build_jump_set: x12 channel requires a two-resonator layout");

  std::vector<NoiseChannel> out;
  for (int res = 1; res <= layout.n_resonators; ++res)
    append_resonator_channels(out, layout, res, rates, cutoff);
  if (rates.x12 > 0) {
    Mat s = embed(pauli(Axis::X), Slot::atom(1, 1), layout).matrix *
            embed(pauli(Axis::X), Slot::atom(1, 2), layout).matrix;
    out.push_back({"x12", std::move(s), rates.x12, cutoff});
  }
  return out;
}

GeneratorContext build_relaxation_operators(const Eigen::VectorXd& energies, const Mat& basis,
                                            const std::vector<NoiseChannel>& channels,
                                            const KernelOptions& opts) {
  const int m = int(energies.size());
  if (m < 3) throw std::invalid_argument("build_relaxation_operators: need at least 3 levels");
  if (basis.cols() != m)
    throw std::invalid_argument("build_relaxation_operators: basis/energy count mismatch");

  GeneratorContext ctx;
  ctx.basis_uid = g_basis_counter.fetch_add(1);
  ctx.energies = energies;
  ctx.basis = basis;
  ctx.kernel = opts;
  ctx.channels.reserve(channels.size());

  for (const NoiseChannel& ch : channels) {
    if (ch.jump.rows() != basis.rows())
      throw std::invalid_argument("build_relaxation_operators: channel '" + ch.label +
                                  "' dimension mismatch");
    if (hermiticity_defect(ch.jump) > 1e-12 * std::max(1.0, ch.jump.cwiseAbs().maxCoeff()))
      throw std::invalid_argument("build_relaxation_operators: channel '" + ch.label +
                                  "' jump operator is not Hermitian");
    ChannelOps ops;
    ops.label = ch.label;
    ops.rate = ch.rate;
    ops.cutoff = ch.cutoff;
    ops.S.noalias() = basis.adjoint() * ch.jump * basis;
    ops.U.resize(m, m);
    for (int row = 0; row < m; ++row)
      for (int col = 0; col < m; ++col)
        ops.U(row, col) =
            ops.S(row, col) *
            half_fourier_kernel(energies(row) - energies(col), ch.rate, ch.cutoff, opts);
    ops.SU.noalias() = ops.S * ops.U;
    ctx.channels.push_back(std::move(ops));
  }
  return ctx;
}

GeneratorContext build_relaxation_operators(const SpectrumResult& spec,
                                            const std::vector<NoiseChannel>& channels,
                                            const KernelOptions& opts) {
  return build_relaxation_operators(spec.eigenvalues, spec.eigenvectors, channels, opts);
}

Mat apply_generator(const GeneratorContext& ctx, const Mat& rho) {
  const int m = ctx.retained();
  if (rho.rows() != m || rho.cols() != m)
    throw std::invalid_argument("apply_generator: dimension mismatch");

  Mat out(m, m);
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < m; ++row)
      out(row, col) = Complex(0, -(ctx.energies(row) - ctx.energies(col))) * rho(row, col);

  Mat t(m, m);
  for (const ChannelOps& ch : ctx.channels) {
    t.noalias() = ch.U * rho;
    out.noalias() += t * ch.S;
    t.noalias() = ch.S * rho;
    out.noalias() += t * ch.U.adjoint();
    out.noalias() -= ch.SU * rho;
    out.noalias() -= rho * ch.SU.adjoint();
  }
  return out;
}

Mat apply_generator_hermitian(const GeneratorContext& ctx, const Mat& rho) {
  const int m = ctx.retained();
  if (rho.rows() != m || rho.cols() != m)
    throw std::invalid_argument("apply_generator_hermitian: dimension mismatch");

  // U rho S - SU rho, then add the adjoint; equals the four-term dissipator
  // when rho is Hermitian.
  Mat g = Mat::Zero(m, m);
  Mat t(m, m);
  for (const ChannelOps& ch : ctx.channels) {
    t.noalias() = ch.U * rho;
    g.noalias() += t * ch.S;
    g.noalias() -= ch.SU * rho;
  }
  Mat out = g + g.adjoint();
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < m; ++row)
      out(row, col) += Complex(0, -(ctx.energies(row) - ctx.energies(col))) * rho(row, col);
  return out;
}

Mat superoperator(const GeneratorContext& ctx) {
  const int m = ctx.retained();
  const long mm = long(m) * m;
  Mat l = Mat::Zero(mm, mm);
  // vec is column-major: vec(rho)[col*m + row] = rho(row, col).
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < m; ++row)
      l(col * m + row, col * m + row) = Complex(0, -(ctx.energies(row) - ctx.energies(col)));

  const Mat id = Mat::Identity(m, m);
  for (const ChannelOps& ch : ctx.channels) {
    // vec(A rho B) = (B^T kron A) vec(rho)
    l += kron(ch.S.transpose(), ch.U);              // U rho S
    l += kron(ch.U.conjugate(), ch.S);              // S rho U^dag
    l -= kron(id, ch.SU);                           // -SU rho
    l -= kron(Mat(ch.SU.conjugate()), id);          // -rho (SU)^dag
  }
  return l;
}

Eigen::VectorXd lamb_shifts(const GeneratorContext& ctx) {
  const int m = ctx.retained();
  Eigen::VectorXd shifts = Eigen::VectorXd::Zero(m);
  for (const ChannelOps& ch : ctx.channels) {
    const Mat h = (ch.SU - ch.SU.adjoint()) / Complex(0, 2);
    shifts += h.diagonal().real();
  }
  return shifts;
}

void dump_relaxation_operators(const GeneratorContext& ctx, std::ostream& os) {
  const int m = ctx.retained();
  for (const ChannelOps& ch : ctx.channels) {
    os << "# channel " << ch.label << " rate " << ch.rate << " cutoff " << ch.cutoff << "\n";
    for (int row = 0; row < m; ++row)
      for (int col = 0; col < m; ++col) {
        const Complex u = ch.U(row, col);
        if (u != Complex(0, 0))
          os << row << " " << col << " " << u.real() << " " << u.imag() << "\n";
      }
  }
}

} // namespace catqed
