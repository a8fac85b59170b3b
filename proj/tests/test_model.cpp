#include "catqed/model.hpp"
#include "catqed/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace catqed;

namespace {

SystemParams rabi(double omega0, int n_atoms = 1, int n_max = 40) {
  SystemParams p;
  p.omega0 = omega0;
  p.n_atoms = n_atoms;
  p.n_max = n_max;
  return p;
}

} // namespace

TEST_CASE("decoupled limit has the bare ladder spectrum") {
  const SystemParams p = rabi(0.0, 1, 6);
  const SpectrumResult s = diagonalize(build_dicke(p), -1);
  CHECK(s.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
  // eigenvalues are n + m - 1/2, n in 0..n_max, m in {0, 1}
  std::vector<double> expected;
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 1; ++m) expected.push_back(n + m - 0.5);
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < s.retained(); ++k)
    CHECK(s.eigenvalues(k) == doctest::Approx(expected[k]).epsilon(1e-10));
}

TEST_CASE("builders are Hermitian") {
  for (double w0 : {0.5, 1.0, 2.0})
    for (int n : {1, 2, 3}) {
      const Operator h = build_dicke(rabi(w0, n, 8));
      CHECK(hermiticity_defect(h.matrix) <= 1e-12);
    }
  const SpaceLayout lay{8, 2, 1};
  PerturbationParams pp{{0.3, -0.1}, {0.2, 0.5}, {-0.7, 0.4}, Complex(0.3, -0.8)};
  CHECK(hermiticity_defect(build_static_perturbation(pp, lay).matrix) <= 1e-12);
  CHECK(hermiticity_defect(build_control_x(0.37, 1, lay).matrix) <= 1e-12);
  CHECK(hermiticity_defect(parity(lay).matrix) <= 1e-12);
}

TEST_CASE("parity operator properties") {
  const SpaceLayout lay{5, 2, 1};
  const Mat pi = parity(lay).matrix;
  CHECK((pi * pi - Mat::Identity(lay.dim(), lay.dim())).cwiseAbs().maxCoeff() < 1e-14);

  // Pi |0, g..g> = (-1)^N |0, g..g>; |0,g..g> is the first basis vector
  Vec vac = Vec::Zero(lay.dim());
  vac(0) = 1.0;
  const Vec pv = pi * vac;
  CHECK((pv - vac).cwiseAbs().maxCoeff() == 0.0); // N = 2: (-1)^2 = +1

  const SpaceLayout lay1{5, 1, 1};
  Vec vac1 = Vec::Zero(lay1.dim());
  vac1(0) = 1.0;
  CHECK((parity(lay1).matrix * vac1 + vac1).cwiseAbs().maxCoeff() == 0.0); // N = 1: -1
}

TEST_CASE("Hamiltonian commutes with parity") {
  for (int n : {1, 2, 3})
    for (double w0 : {0.5, 1.0, 2.0}) {
      const SystemParams p = rabi(w0, n, n == 3 ? 10 : 16);
      const Mat h = build_dicke(p).matrix;
      const Mat pi = parity(p.layout()).matrix;
      CHECK((h * pi - pi * h).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("ground state photon number matches the cat size") {
  const SystemParams p = rabi(2.0, 1, 40);
  const SpectrumResult s = diagonalize(build_dicke(p), 4);
  const Mat a = annihilation(p.n_max);
  const Mat num = embed(Mat(a.adjoint() * a), Slot::photon(), p.layout()).matrix;
  const double n = (s.eigenvectors.col(0).adjoint() * num * s.eigenvectors.col(0))(0).real();
  CHECK(n == doctest::Approx(4.0).epsilon(0.10)); // |alpha|^2 = N Omega0^2 / omega_cav^2
}

TEST_CASE("ground energy is non-increasing in Omega0") {
  double prev = 1e300;
  for (double w0 = 0.0; w0 <= 2.01; w0 += 0.25) {
    const SpectrumResult s = diagonalize(build_dicke(rabi(w0, 1, 30)), 1);
    CHECK(s.eigenvalues(0) <= prev + 1e-12);
    prev = s.eigenvalues(0);
  }
}

TEST_CASE("static perturbation special cases") {
  const SpaceLayout lay{4, 2, 1};
  SUBCASE("all amplitudes zero gives the zero operator") {
    PerturbationParams pp{{0, 0}, {0, 0}, {0, 0}, 0.0};
    CHECK(build_static_perturbation(pp, lay).matrix.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("single h_z term reduces to an embedded sigma_z") {
    PerturbationParams pp{{0, 0}, {0, 0}, {0.37, 0}, 0.0};
    const Mat diff = build_static_perturbation(pp, lay).matrix -
                     0.37 * embed(pauli(Axis::Z), Slot::atom(1), lay).matrix;
    CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("array length must match the layout") {
    PerturbationParams pp{{0.0}, {0.0}, {0.0}, 0.0};
    CHECK_THROWS(build_static_perturbation(pp, lay));
  }
}

TEST_CASE("y/z perturbation block is exponentially suppressed") {
  // log-magnitude of the doublet off-diagonal element vs Omega0^2 has slope
  // -2 (N = 1, resonant), within 20%
  std::vector<double> xs, ys;
  for (double w0 : {1.0, 1.5, 2.0}) {
    const SystemParams p = rabi(w0, 1, 40);
    const SpectrumResult s = diagonalize(build_dicke(p), -1);
    const VacuumDoublet d = vacuum_doublet(s, p);
    PerturbationParams pp{{0.0}, {1.0}, {1.0}, 0.0};
    const Eigen::Matrix2cd b = perturbation_block(d, build_static_perturbation(pp, p.layout()));
    xs.push_back(w0 * w0);
    ys.push_back(std::log(std::abs(b(0, 1))));
  }
  const double slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
  CHECK(slope == doctest::Approx(-2.0).epsilon(0.20));
}

TEST_CASE("control term splits the doublet by 2 c_amp") {
  const SystemParams p = rabi(2.0, 1, 40);
  const SpectrumResult bare = diagonalize(build_dicke(p), 2);
  const double delta0 = bare.eigenvalues(1) - bare.eigenvalues(0);
  const double c = 1e3 * delta0;
  REQUIRE(c < 0.5); // c must stay well below the gap for the split-doublet picture

  const Mat h = build_dicke(p).matrix + build_control_x(c, 1, p.layout()).matrix;
  const SpectrumResult s = diagonalize(Operator(p.layout(), h), 2);
  const double split = s.eigenvalues(1) - s.eigenvalues(0);
  CHECK(split == doctest::Approx(2 * c).epsilon(0.05));

  const Mat ctrl = build_control_x(c, 1, p.layout()).matrix;
  const Mat sx = embed(pauli(Axis::X), Slot::atom(1), p.layout()).matrix;
  CHECK((ctrl * sx - sx * ctrl).cwiseAbs().maxCoeff() == 0.0);
  CHECK(build_control_x(0.0, 1, p.layout()).matrix.cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS(build_control_x(1.0, 2, p.layout()));
}

TEST_CASE("two-resonator composite") {
  SystemParams p = rabi(1.0, 1, 6);

  SUBCASE("uncoupled spectrum is the pairwise sum of the parts") {
    const SpectrumResult one = diagonalize(build_dicke(p), -1);
    const SpectrumResult two = diagonalize(build_two_resonator(p, p, 0.0), -1);
    std::vector<double> sums;
    for (int i = 0; i < one.retained(); ++i)
      for (int j = 0; j < one.retained(); ++j) sums.push_back(one.eigenvalues(i) + one.eigenvalues(j));
    std::sort(sums.begin(), sums.end());
    for (int k = 0; k < two.retained(); ++k)
      CHECK(std::abs(two.eigenvalues(k) - sums[k]) < 1e-9);
  }

  SUBCASE("uncoupled identical resonators give a fourfold quasi-degenerate ground manifold") {
    p = rabi(2.0, 1, 20);
    const SpectrumResult one = diagonalize(build_dicke(p), 2);
    const double delta = one.eigenvalues(1) - one.eigenvalues(0);
    const SpectrumResult two = diagonalize(build_two_resonator(p, p, 0.0), 5);
    CHECK(two.eigenvalues(3) - two.eigenvalues(0) <= 2 * delta + 1e-12);
    CHECK(two.eigenvalues(4) - two.eigenvalues(3) > 10 * delta);
  }

  SUBCASE("coupling splits the quartet into two pairs") {
    p = rabi(2.0, 1, 20);
    const SpectrumResult one = diagonalize(build_dicke(p), 3);
    const double delta = one.eigenvalues(1) - one.eigenvalues(0);
    const double gap = one.eigenvalues(2) - one.eigenvalues(1);
    const double c12 = std::sqrt(delta * gap); // delta << c12 << gap
    const SpectrumResult two = diagonalize(build_two_resonator(p, p, c12), 4);
    // {++, --} shift opposite to {+-, -+}: two pairs separated by ~2 c12
    const double pair_split = two.eigenvalues(2) - two.eigenvalues(1);
    CHECK(pair_split == doctest::Approx(2 * c12).epsilon(0.05));
    CHECK(two.eigenvalues(1) - two.eigenvalues(0) < 0.1 * pair_split);
    CHECK(two.eigenvalues(3) - two.eigenvalues(2) < 0.1 * pair_split);
  }

  SUBCASE("dimension ceiling rejects oversized composites") {
    CHECK_THROWS(build_two_resonator(rabi(1.0, 1, 40), rabi(1.0, 1, 40), 0.0));
    CHECK_NOTHROW(build_two_resonator(rabi(1.0, 1, 40), rabi(1.0, 1, 40), 0.0, 7000));
  }
}
