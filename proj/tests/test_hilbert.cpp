#include "catqed/hilbert.hpp"

#include <doctest.h>

#include <cmath>

using namespace catqed;

TEST_CASE("annihilation matrix elements") {
  const Mat a = annihilation(4);
  CHECK(a(0, 1) == Complex(1.0, 0.0));        // <0|a|1> = sqrt(1)
  CHECK(a(3, 4) == Complex(2.0, 0.0));        // <3|a|4> = sqrt(4)
  CHECK(a(4, 4) == Complex(0.0, 0.0));        // hard truncation: no outgoing element

  const Mat num = a.adjoint() * a;
  for (int n = 0; n <= 4; ++n) {
    CHECK(num(n, n).real() == doctest::Approx(double(n)).epsilon(1e-15));
    CHECK(num(n, n).imag() == 0.0);
  }
  CHECK((num - Mat(num.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS(annihilation(0));
}

TEST_CASE("pauli algebra") {
  const Mat sx = pauli(Axis::X), sy = pauli(Axis::Y), sz = pauli(Axis::Z);
  const Mat id = Mat::Identity(2, 2);

  CHECK((sx * sx - id).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sx * sy - sy * sx - Complex(0, 2) * sz).cwiseAbs().maxCoeff() == 0.0);
  CHECK(hermiticity_defect(sx) == 0.0);
  CHECK(hermiticity_defect(sy) == 0.0);
  CHECK(hermiticity_defect(sz) == 0.0);

  // |+-> = (|e> +- |g>)/sqrt(2) are sigma_x eigenstates; basis order (g, e)
  Vec plus(2), minus(2);
  plus << 1, 1;
  minus << 1, -1;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  CHECK((sx * plus - plus).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((sx * minus + minus).cwiseAbs().maxCoeff() < 1e-15);

  // convention spot checks in the (g, e) ordering
  CHECK(sz(0, 0) == Complex(-1, 0));
  CHECK(sy(0, 1) == Complex(0, 1));
}

TEST_CASE("embed places subsystems by the fixed ordering") {
  const SpaceLayout lay{1, 2, 1}; // n_max=1, two atoms: dim = 2*4 = 8
  const Mat sz1 = embed(pauli(Axis::Z), Slot::atom(1), lay).matrix;
  CHECK(sz1.trace() == Complex(0, 0));
  CHECK(sz1.rows() == 8);

  const Mat id_embed = embed(Mat::Identity(2, 2), Slot::atom(2), lay).matrix;
  CHECK((id_embed - Mat::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

  // photon-major ordering: number operator acts on the most significant index
  const Mat a = annihilation(1);
  const Mat n_embed = embed(Mat(a.adjoint() * a), Slot::photon(), lay).matrix;
  for (int i = 0; i < 8; ++i) CHECK(n_embed(i, i).real() == (i < 4 ? 0.0 : 1.0));

  CHECK_THROWS(embed(pauli(Axis::X), Slot::atom(3), lay));
  CHECK_THROWS(embed(pauli(Axis::X), Slot::photon(), SpaceLayout{2, 1, 1})); // dim mismatch
  CHECK_THROWS(embed(pauli(Axis::X), Slot::atom(1, 2), lay));
}

TEST_CASE("embed respects the operator algebra (Kronecker oracle)") {
  const SpaceLayout lay{1, 2, 1};
  const Mat sx = pauli(Axis::X);

  // embed(sx, atom1) * embed(sx, atom2) equals the direct product oracle
  const Mat lhs = embed(sx, Slot::atom(1), lay).matrix * embed(sx, Slot::atom(2), lay).matrix;
  const Mat oracle = kron(Mat::Identity(2, 2), kron(sx, sx));
  CHECK((lhs - oracle).cwiseAbs().maxCoeff() < 1e-15);

  // embed(AB) = embed(A) embed(B) on one slot, brute-force oracle dims <= 64
  for (Axis ax1 : {Axis::X, Axis::Y, Axis::Z})
    for (Axis ax2 : {Axis::X, Axis::Y, Axis::Z}) {
      const SpaceLayout lay2{3, 2, 1}; // dim 16
      const Mat ab = pauli(ax1) * pauli(ax2);
      const Mat lhs2 = embed(pauli(ax1), Slot::atom(2), lay2).matrix *
                       embed(pauli(ax2), Slot::atom(2), lay2).matrix;
      CHECK((lhs2 - embed(ab, Slot::atom(2), lay2).matrix).cwiseAbs().maxCoeff() < 1e-14);
    }

  // two-resonator ordering: resonator 1 block is most significant
  const SpaceLayout lay12{1, 1, 2}; // dim 16
  const Mat z_r2 = embed(pauli(Axis::Z), Slot::atom(1, 2), lay12).matrix;
  const Mat oracle_r2 = kron(Mat::Identity(4, 4), kron(Mat::Identity(2, 2), pauli(Axis::Z)));
  CHECK((z_r2 - oracle_r2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("coherent state amplitudes and overlaps") {
  SUBCASE("alpha = 0 is the Fock vacuum") {
    const CoherentState c = coherent_state(0.0, 10);
    CHECK(c.amplitudes(0) == Complex(1, 0));
    CHECK(c.amplitudes.tail(10).cwiseAbs().maxCoeff() == 0.0);
    CHECK(c.truncated_weight == 0.0);
    CHECK_FALSE(c.warn);
  }

  SUBCASE("<-alpha|alpha> = exp(-2|alpha|^2) at |alpha|^2 = 4") {
    const Complex alpha(2.0, 0.0);
    const CoherentState cp = coherent_state(alpha, 40);
    const CoherentState cm = coherent_state(-alpha, 40);
    const Complex overlap = cm.amplitudes.dot(cp.amplitudes);
    CHECK(std::abs(overlap.real() - std::exp(-8.0)) < 1e-6); // 3.3546e-4
    CHECK(std::abs(overlap.imag()) < 1e-12);
  }

  SUBCASE("<a^dag a> = |alpha|^2 within 1e-6") {
    const CoherentState c = coherent_state(Complex(0.0, 2.0), 40);
    const Mat a = annihilation(40);
    const double n = (c.amplitudes.adjoint() * a.adjoint() * a * c.amplitudes)(0).real();
    CHECK(n == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(c.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("truncation warning fires when the cutoff bites") {
    const CoherentState c = coherent_state(Complex(3.0, 0.0), 9);
    CHECK(c.warn);
    CHECK(c.truncated_weight > 1e-6);
  }

  SUBCASE("norm deficiency decreases monotonically with n_max") {
    double prev = 1.0;
    for (int n_max : {8, 16, 32, 64}) {
      const double w = coherent_state(Complex(2.0, 0.0), n_max).truncated_weight;
      CHECK(w <= prev + 1e-15);
      prev = w;
    }
    CHECK(prev < 1e-12);
  }
}
