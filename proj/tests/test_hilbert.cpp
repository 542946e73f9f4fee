#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/QR>

#include "covmag/gates.hpp"
#include "covmag/hilbert.hpp"
#include "covmag/rng.hpp"

using namespace covmag;

namespace {

Mat4 random_unitary(CounterRng& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cx(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Mat4> qr(g);
  Mat4 q = qr.householderQ();
  // fix column phases so Q is drawn from the unitary group
  Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

// generic two-qubit density matrix in the printed parameterization
Mat4 rho_gen(double A0, double B0, double C0, double D0, double a0, double pa) {
  Mat4 r = Mat4::Zero();
  r(0, 0) = D0;
  r(1, 1) = C0;
  r(2, 2) = B0;
  r(3, 3) = A0;
  r(0, 3) = a0 * std::polar(1.0, -pa);
  r(3, 0) = a0 * std::polar(1.0, pa);
  return r / 2.0;
}

}  // namespace

TEST_CASE("basis order and basis states") {
  CHECK(basis_index(1, 1) == 0);
  CHECK(basis_index(1, 0) == 1);
  CHECK(basis_index(0, 1) == 2);
  CHECK(basis_index(0, 0) == 3);
  auto p = measure_populations(basis_state(0, 0));
  CHECK(p[0] == 0.0);
  CHECK(p[3] == 1.0);
}

TEST_CASE("apply: identity and Bell preparation") {
  const PureState s00 = basis_state(0, 0);
  const UnitaryOp id{Mat4::Identity()};
  CHECK((apply(id, s00).amps - s00.amps).norm() == 0.0);

  const auto spec = CouplingSpec::maximal(2 * pi * 250e3);
  const PureState prepared = apply(entangle_phi(spec), s00);
  CHECK((prepared.amps - bell_phi().amps).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("apply rejects a non-unitary operator") {
  Mat4 bad = Mat4::Identity();
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(apply(UnitaryOp{bad}, basis_state(0, 0)), invalid_operator_error);
}

TEST_CASE("random unitaries preserve the norm") {
  CounterRng rng(5, 0);
  for (int k = 0; k < 50; ++k) {
    Mat4 u = random_unitary(rng);
    Vec4 v;
    for (int i = 0; i < 4; ++i) v(i) = cx(rng.normal(), rng.normal());
    v.normalize();
    const PureState out = apply(UnitaryOp::checked(u), PureState{v});
    CHECK(std::abs(out.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("norm preserved through 1000 random gates") {
  CounterRng rng(17, 1);
  PureState s = bell_phi();
  for (int k = 0; k < 1000; ++k) s = PureState{random_unitary(rng) * s.amps};
  CHECK(std::abs(s.norm() - 1.0) < 1e-9);
}

TEST_CASE("fidelity examples") {
  const DensityMatrix rho_phi = outer(bell_phi());
  CHECK(fidelity(rho_phi, rho_phi) == doctest::Approx(1.0).epsilon(1e-12));

  const DensityMatrix mixed{Mat4::Identity() / 4.0};
  CHECK(fidelity(rho_phi, mixed) == doctest::Approx(0.25).epsilon(1e-12));

  // ideal coherence a0 = 1 at phase -pi/2 is the Bell state itself
  const DensityMatrix gen{rho_gen(1, 0, 0, 1, 1.0, -pi / 2)};
  CHECK(fidelity(rho_phi, gen) == doctest::Approx(1.0).epsilon(1e-12));

  Mat4 bad = rho_phi.m;
  bad(0, 1) = cx(0.1, 0.2);
  CHECK_THROWS_AS(fidelity(rho_phi, DensityMatrix{bad}), invalid_state_error);
}

TEST_CASE("fidelity against the direct-trace oracle on random rho_gen") {
  const DensityMatrix rho_phi = outer(bell_phi());
  CounterRng rng(3, 9);
  for (int k = 0; k < 20; ++k) {
    const double a0 = rng.uniform(0, 0.9), pa = rng.uniform(-pi, pi);
    const double A0 = rng.uniform(0.5, 1.0);
    const double D0 = A0, rest = 2 - A0 - D0;
    const Mat4 g = rho_gen(A0, rest / 2, rest / 2, D0, a0, pa);
    const double direct = (rho_phi.m * g).trace().real();
    CHECK(fidelity(rho_phi, DensityMatrix{g}) == doctest::Approx(direct).epsilon(1e-14));
    // closed form of the same trace
    CHECK(direct ==
          doctest::Approx((A0 + D0) / 4.0 - (a0 / 2.0) * std::sin(pa)).epsilon(1e-12));
  }
}

TEST_CASE("measure_populations examples and sum rule") {
  auto p = measure_populations(basis_state(0, 0));
  CHECK(p == std::array<double, 4>{0, 0, 0, 1});

  auto pb = measure_populations(bell_phi());
  CHECK(pb[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pb[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pb[1] + pb[2] < 1e-15);

  // full population transfer at phi_a + phi_b = pi through the signal chain
  const auto spec = CouplingSpec::maximal(2 * pi * 250e3);
  PureState s = apply(entangle_phi(spec), basis_state(0, 0));
  s = apply(external_phase({0.4, pi - 0.4}), s);
  s = apply(disentangle(BellVariant::phi, spec, ReadoutChannel::signal), s);
  auto pf = measure_populations(s);
  CHECK(pf[basis_index(1, 1)] == doctest::Approx(1.0).epsilon(1e-12));

  CounterRng rng(23, 2);
  for (int k = 0; k < 10; ++k) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v(i) = cx(rng.normal(), rng.normal());
    v.normalize();
    auto pr = measure_populations(PureState{v});
    CHECK(std::abs(pr[0] + pr[1] + pr[2] + pr[3] - 1.0) < 1e-12);
  }
}

TEST_CASE("state and operator validation") {
  CHECK_THROWS_AS(PureState::checked(Vec4::Ones()), invalid_state_error);
  CHECK_NOTHROW(PureState::checked(bell_psi().amps));
  CHECK_THROWS_AS(DensityMatrix::checked(Mat4::Identity()), invalid_state_error);
  CHECK_NOTHROW(DensityMatrix::checked(Mat4::Identity() / 4.0));
  Mat4 neg = Mat4::Zero();
  neg(0, 0) = 1.5;
  neg(3, 3) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::checked(neg), invalid_state_error);
  CHECK_THROWS_AS(UnitaryOp::checked(Mat4::Zero()), invalid_operator_error);
}

TEST_CASE("dephasing channel keeps trace and hermiticity, damps coherences") {
  const DensityMatrix rho = outer(bell_phi());
  const DensityMatrix d = dephase(rho, 0.7, 0.5);
  CHECK(d.trace_real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(is_hermitian(d.m, 1e-14));
  // the double-quantum coherence picks up the product factor
  CHECK(std::abs(d.m(0, 3)) ==
        doctest::Approx(0.7 * 0.5 * std::abs(rho.m(0, 3))).epsilon(1e-12));
  for (int i = 0; i < 4; ++i) CHECK(d.m(i, i) == rho.m(i, i));
}
