#include "covmag/gates.hpp"

#include <cmath>

namespace covmag {

namespace {

Mat2 rot2(double angle, PulseAxis axis) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Mat2 r;
  switch (axis) {
    case PulseAxis::plus_x:
      r << c, cx(0, -s), cx(0, -s), c;
      break;
    case PulseAxis::minus_x:
      r << c, cx(0, s), cx(0, s), c;
      break;
    case PulseAxis::plus_y:
      r << c, -s, s, c;
      break;
    case PulseAxis::minus_y:
      r << c, s, -s, c;
      break;
  }
  return r;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const Mat2 id2 = Mat2::Identity();

}  // namespace

CouplingSpec CouplingSpec::maximal(double j_zz) {
  if (j_zz <= 0.0) throw miscalibrated_gate_error("coupling J_zz must be positive");
  return CouplingSpec{j_zz, pi / j_zz};
}

void CouplingSpec::validate() const {
  if (j_zz <= 0.0) throw miscalibrated_gate_error("coupling J_zz must be positive");
  if (std::abs(j_zz * t_e - pi) > 1e-9 * pi)
    throw miscalibrated_gate_error("entangling gate off condition t_e = pi/J_zz");
}

UnitaryOp pulse_a(double angle, PulseAxis axis) {
  return UnitaryOp{kron(rot2(angle, axis), id2)};
}

UnitaryOp pulse_b(double angle, PulseAxis axis) {
  return UnitaryOp{kron(id2, rot2(angle, axis))};
}

UnitaryOp rz_a(double angle) {
  Mat2 z = Mat2::Zero();
  z(0, 0) = std::polar(1.0, -angle / 2);
  z(1, 1) = std::polar(1.0, angle / 2);
  return UnitaryOp{kron(z, id2)};
}

UnitaryOp rz_b(double angle) {
  Mat2 z = Mat2::Zero();
  z(0, 0) = std::polar(1.0, -angle / 2);
  z(1, 1) = std::polar(1.0, angle / 2);
  return UnitaryOp{kron(id2, z)};
}

UnitaryOp rotation_global(double phi) {
  const Mat2 r = rot2(phi, PulseAxis::plus_x);
  return UnitaryOp{kron(r, r)};
}

UnitaryOp rotation_relative(double phi) {
  return UnitaryOp{kron(rot2(phi, PulseAxis::plus_x), rot2(-phi, PulseAxis::plus_x))};
}

UnitaryOp ising_evolution(double j_zz, double t) {
  if (t < 0.0) throw std::domain_error("ising_evolution: negative duration");
  Mat4 u = Mat4::Identity();
  u(basis_index(1, 1), basis_index(1, 1)) = std::polar(1.0, -j_zz * t);
  return UnitaryOp{u};
}

UnitaryOp external_phase(const PhasePair& p) {
  Mat4 u = Mat4::Zero();
  u(basis_index(1, 1), basis_index(1, 1)) = std::polar(1.0, -(p.phi_a + p.phi_b));
  u(basis_index(1, 0), basis_index(1, 0)) = std::polar(1.0, -p.phi_a);
  u(basis_index(0, 1), basis_index(0, 1)) = std::polar(1.0, -p.phi_b);
  u(basis_index(0, 0), basis_index(0, 0)) = 1.0;
  return UnitaryOp{u};
}

UnitaryOp entangle(BellVariant v, const CouplingSpec& spec) {
  spec.validate();
  const Mat4 uzz = ising_evolution(spec.j_zz, spec.t_e / 2).m;
  const Mat4 last =
      v == BellVariant::psi ? rotation_relative(pi / 2).m : rotation_global(pi / 2).m;
  return UnitaryOp{last * uzz * rotation_global(pi).m * uzz *
                   rotation_global(pi / 2).m};
}

UnitaryOp entangle_phi(const CouplingSpec& spec) { return entangle(BellVariant::phi, spec); }
UnitaryOp entangle_psi(const CouplingSpec& spec) { return entangle(BellVariant::psi, spec); }

BlockHalves disentangle_halves(BellVariant v, const CouplingSpec& spec,
                               ReadoutChannel ch) {
  spec.validate();
  const Mat4 uzz = ising_evolution(spec.j_zz, spec.t_e / 2).m;
  const Mat4 opening = v == BellVariant::psi ? rotation_relative(-pi / 2).m
                                             : rotation_global(-pi / 2).m;
  const double s = ch == ReadoutChannel::signal ? +1.0 : -1.0;
  return BlockHalves{UnitaryOp{uzz * opening},
                     UnitaryOp{rotation_global(s * pi / 2).m * uzz *
                               rotation_global(pi).m}};
}

UnitaryOp disentangle(BellVariant v, const CouplingSpec& spec, ReadoutChannel ch) {
  const BlockHalves h = disentangle_halves(v, spec, ch);
  return UnitaryOp{h.second.m * h.first.m};
}

UnitaryOp disentangle_phi(const CouplingSpec& spec) {
  return disentangle(BellVariant::phi, spec, ReadoutChannel::reference);
}

UnitaryOp disentangle_psi(const CouplingSpec& spec) {
  return disentangle(BellVariant::psi, spec, ReadoutChannel::signal);
}

UnitaryOp frame_rotation(double phi) {
  Mat4 u = Mat4::Zero();
  u(basis_index(1, 1), basis_index(1, 1)) = std::polar(1.0, -2 * phi);
  u(basis_index(1, 0), basis_index(1, 0)) = std::polar(1.0, -phi);
  u(basis_index(0, 1), basis_index(0, 1)) = std::polar(1.0, -phi);
  u(basis_index(0, 0), basis_index(0, 0)) = 1.0;
  return UnitaryOp{u};
}

BlockHalves disentangle_tppi_halves(const CouplingSpec& spec, double phi_tppi,
                                    BellVariant v, ReadoutChannel ch) {
  // advancing every pulse phase by phi is a conjugation by the frame
  // rotation; the free evolutions are diagonal and unaffected
  const BlockHalves h = disentangle_halves(v, spec, ch);
  const Mat4 f = frame_rotation(phi_tppi).m;
  const Mat4 fi = frame_rotation(-phi_tppi).m;
  return BlockHalves{UnitaryOp{f * h.first.m * fi}, UnitaryOp{f * h.second.m * fi}};
}

UnitaryOp disentangle_tppi(const CouplingSpec& spec, double phi_tppi, BellVariant v,
                           ReadoutChannel ch) {
  const BlockHalves h = disentangle_tppi_halves(spec, phi_tppi, v, ch);
  return UnitaryOp{h.second.m * h.first.m};
}

UnitaryOp cnot(Control control, const CouplingSpec& spec, int sign,
               bool omit_final_half_pulse) {
  spec.validate();
  const Mat4 cz = ising_evolution(spec.j_zz, spec.t_e).m;
  const PulseAxis open_axis = sign >= 0 ? PulseAxis::plus_y : PulseAxis::minus_y;
  const PulseAxis close_axis = sign >= 0 ? PulseAxis::minus_y : PulseAxis::plus_y;
  const UnitaryOp open_p = control == Control::a ? pulse_b(pi / 2, open_axis)
                                                 : pulse_a(pi / 2, open_axis);
  const UnitaryOp close_p = control == Control::a ? pulse_b(pi / 2, close_axis)
                                                  : pulse_a(pi / 2, close_axis);
  Mat4 u = cz * open_p.m;
  if (!omit_final_half_pulse) u = close_p.m * u;
  return UnitaryOp{u};
}

UnitaryOp swap_from_cnots(const CouplingSpec& spec, int sign) {
  // CNOT(a->b) then CNOT(b->a); the third CNOT of a full SWAP is omitted
  // because NVb starts in m_s = 0
  return UnitaryOp{cnot(Control::b, spec).m * cnot(Control::a, spec, sign).m};
}

UnitaryOp two_time_readout(BellVariant v, const CouplingSpec& spec) {
  const Mat4 core = entangle_phi(spec).m;
  if (v == BellVariant::phi) {
    const Mat4 left = pulse_a(pi / 2, PulseAxis::plus_y).m;
    const Mat4 right = rz_a(pi / 2).m * rz_b(pi).m;
    return UnitaryOp{left * core * right};
  }
  const Mat4 left = pulse_a(pi / 2, PulseAxis::minus_y).m * pulse_b(pi, PulseAxis::plus_x).m;
  const Mat4 right = rz_a(pi / 2).m * pulse_b(pi, PulseAxis::plus_x).m;
  return UnitaryOp{left * core * right};
}

}  // namespace covmag
