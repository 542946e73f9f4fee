#include "covmag/hilbert.hpp"

#include <Eigen/Eigenvalues>

namespace covmag {

bool is_unitary(const Mat4& m, double tolerance) {
  return ((m.adjoint() * m) - Mat4::Identity()).cwiseAbs().maxCoeff() < tolerance;
}

bool is_hermitian(const Mat4& m, double tolerance) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tolerance;
}

PureState PureState::checked(const Vec4& a) {
  PureState s{a};
  if (std::abs(s.norm() - 1.0) > tol().structural)
    throw invalid_state_error("pure state is not normalized");
  return s;
}

DensityMatrix DensityMatrix::checked(const Mat4& m) {
  if (!is_hermitian(m, tol().structural))
    throw invalid_state_error("density matrix is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol().structural ||
      std::abs(m.trace().imag()) > tol().structural)
    throw invalid_state_error("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat4> es(m);
  if (es.eigenvalues().minCoeff() < tol().eigen_floor)
    throw invalid_state_error("density matrix has a negative eigenvalue");
  return DensityMatrix{m};
}

UnitaryOp UnitaryOp::checked(const Mat4& m) {
  if (!is_unitary(m, tol().structural))
    throw invalid_operator_error("operator is not unitary");
  return UnitaryOp{m};
}

PureState basis_state(int m_a, int m_b) {
  Vec4 v = Vec4::Zero();
  v(basis_index(m_a, m_b)) = 1.0;
  return PureState{v};
}

PureState bell_phi() {
  // e^{-i pi/4}/sqrt(2) (|0,0> + i|1,1>)
  const cx g = std::polar(1.0, -pi / 4) / std::sqrt(2.0);
  Vec4 v = Vec4::Zero();
  v(basis_index(1, 1)) = g * cx(0, 1);
  v(basis_index(0, 0)) = g;
  return PureState{v};
}

PureState bell_psi() {
  // e^{+i pi/4}/sqrt(2) (|0,1> + i|1,0>)
  const cx g = std::polar(1.0, pi / 4) / std::sqrt(2.0);
  Vec4 v = Vec4::Zero();
  v(basis_index(0, 1)) = g;
  v(basis_index(1, 0)) = g * cx(0, 1);
  return PureState{v};
}

PureState bell_superposition() {
  Vec4 v;
  v(basis_index(1, 1)) = 0.5;
  v(basis_index(1, 0)) = cx(0, 0.5);
  v(basis_index(0, 1)) = cx(0, 0.5);
  v(basis_index(0, 0)) = 0.5;
  return PureState{v};
}

PureState apply(const UnitaryOp& u, const PureState& s) {
  if (!is_unitary(u.m, tol().structural))
    throw invalid_operator_error("apply: operator failed the unitarity check");
  return PureState{u.m * s.amps};
}

DensityMatrix apply(const UnitaryOp& u, const DensityMatrix& rho) {
  if (!is_unitary(u.m, tol().structural))
    throw invalid_operator_error("apply: operator failed the unitarity check");
  return DensityMatrix{u.m * rho.m * u.m.adjoint()};
}

DensityMatrix outer(const PureState& s) {
  return DensityMatrix{s.amps * s.amps.adjoint()};
}

double fidelity(const DensityMatrix& rho_target, const DensityMatrix& rho) {
  if (!is_hermitian(rho_target.m, tol().structural) ||
      !is_hermitian(rho.m, tol().structural))
    throw invalid_state_error("fidelity: non-Hermitian input");
  // purity check on the target: Tr[rho^2] = 1
  if (std::abs((rho_target.m * rho_target.m).trace().real() - 1.0) > 1e-9)
    throw invalid_state_error("fidelity: target state is not pure");
  return (rho_target.m * rho.m).trace().real();
}

std::array<double, 4> measure_populations(const PureState& s) {
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = std::norm(s.amps(i));
  return p;
}

std::array<double, 4> populations(const DensityMatrix& rho) {
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = rho.m(i, i).real();
  return p;
}

DensityMatrix dephase(const DensityMatrix& rho, double c_a, double c_b) {
  Mat4 out = rho.m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double f = 1.0;
      if (spin_a_of(i) != spin_a_of(j)) f *= c_a;
      if (spin_b_of(i) != spin_b_of(j)) f *= c_b;
      out(i, j) *= f;
    }
  return DensityMatrix{out};
}

}  // namespace covmag
