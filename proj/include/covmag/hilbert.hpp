#pragma once

#include <array>

#include "covmag/types.hpp"

// Exact linear algebra on the 4-dimensional two-qubit subspace.
// Basis order: (|1,1>, |1,0>, |0,1>, |0,0>), matching the operator matrices
// in gates.hpp entry for entry.
namespace covmag {

struct PureState {
  Vec4 amps;

  double norm() const { return amps.norm(); }
  static PureState checked(const Vec4& a);
};

struct DensityMatrix {
  Mat4 m;

  double trace_real() const { return m.trace().real(); }
  static DensityMatrix checked(const Mat4& m);
};

struct UnitaryOp {
  Mat4 m;

  static UnitaryOp checked(const Mat4& m);
};

// basis index helpers: index = 2*(1 - m_a) + (1 - m_b), m in {0,1}
inline int basis_index(int m_a, int m_b) { return 2 * (1 - m_a) + (1 - m_b); }
inline int spin_a_of(int index) { return 1 - (index >> 1); }
inline int spin_b_of(int index) { return 1 - (index & 1); }

PureState basis_state(int m_a, int m_b);
// |Phi(0)> and |Psi(0)> with the phases printed for U |0,0>
PureState bell_phi();
PureState bell_psi();
// |psi_1> = (|0,0> + |1,1> + i|0,1> + i|1,0>)/2 used by the overlapping
// two-time protocol
PureState bell_superposition();

PureState apply(const UnitaryOp& u, const PureState& s);
DensityMatrix apply(const UnitaryOp& u, const DensityMatrix& rho);

DensityMatrix outer(const PureState& s);

// Tr[rho_target rho]; rho_target must be pure
double fidelity(const DensityMatrix& rho_target, const DensityMatrix& rho);

std::array<double, 4> measure_populations(const PureState& s);
std::array<double, 4> populations(const DensityMatrix& rho);

// per-NV pure-dephasing channel: elements whose NVa (NVb) spin labels differ
// are multiplied by c_a (c_b), with c = e^{-chi} in (0,1]
DensityMatrix dephase(const DensityMatrix& rho, double c_a, double c_b);

bool is_unitary(const Mat4& m, double tolerance);
bool is_hermitian(const Mat4& m, double tolerance);

}  // namespace covmag
