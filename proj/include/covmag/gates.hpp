#pragma once

#include "covmag/hilbert.hpp"
#include "covmag/types.hpp"

// Pulse-sequence propagators for the strongly coupled NV pair. Pulses are
// instantaneous; the Ising coupling acts in the m_s in {0,1} projector form
// U_zz(t) = diag(e^{-i J t}, 1, 1, 1), which reproduces the reference Bell
// propagator matrices entry for entry (see tests/test_gates.cpp goldens).
namespace covmag {

struct CouplingSpec {
  double j_zz;  // NV-NV coupling (rad/s)
  double t_e;   // entangling gate duration (s)

  // the maximal-entanglement choice t_e = pi / J_zz
  static CouplingSpec maximal(double j_zz);
  void validate() const;  // throws miscalibrated_gate_error off condition
};

struct PhasePair {
  double phi_a = 0.0;
  double phi_b = 0.0;
};

enum class BellVariant { phi, psi };
// sign of the final pi/2 pulse of a disentangling block; the two choices
// give complementary populations and form the sig/ref contrast pair
enum class ReadoutChannel { signal, reference };

enum class PulseAxis { plus_x, minus_x, plus_y, minus_y };

// single-qubit rotations embedded in the pair space (I_x = sigma_x/2)
UnitaryOp pulse_a(double angle, PulseAxis axis);
UnitaryOp pulse_b(double angle, PulseAxis axis);
UnitaryOp rz_a(double angle);
UnitaryOp rz_b(double angle);

// exp[-i (I_x1 + I_x2) phi]
UnitaryOp rotation_global(double phi);
// exp[-i (I_x1 - I_x2) phi]
UnitaryOp rotation_relative(double phi);

// exp[-i J_zz t |1><1| x |1><1|]; throws std::domain_error for t < 0
UnitaryOp ising_evolution(double j_zz, double t);

// diagonal phase accumulation |1,1> -> e^{-i(phi_a+phi_b)}, |1,0> -> e^{-i phi_a},
// |0,1> -> e^{-i phi_b}, |0,0> -> |0,0>
UnitaryOp external_phase(const PhasePair& p);

// Hahn-echo entangling blocks, first pulse rightmost:
//   U_phi = R_{pi/2}  Uzz(t_e/2) R_pi Uzz(t_e/2) R_{pi/2}
//   U_psi = Rb_{pi/2} Uzz(t_e/2) R_pi Uzz(t_e/2) R_{pi/2}   (Rb = relative)
UnitaryOp entangle_phi(const CouplingSpec& spec);
UnitaryOp entangle_psi(const CouplingSpec& spec);
UnitaryOp entangle(BellVariant v, const CouplingSpec& spec);

// Disentangling blocks. The reference-channel Phi block and the
// signal-channel Psi block are the ones whose matrices are printed in the
// source material; disentangle_phi/disentangle_psi return exactly those.
UnitaryOp disentangle(BellVariant v, const CouplingSpec& spec, ReadoutChannel ch);
UnitaryOp disentangle_phi(const CouplingSpec& spec);  // reference channel
UnitaryOp disentangle_psi(const CouplingSpec& spec);  // signal channel

// disentangling block split at the central pi pulse: full block =
// second.m * first.m; decoherence channels are inserted between the halves
struct BlockHalves {
  UnitaryOp first;   // Uzz(t_e/2) followed by the opening pi/2
  UnitaryOp second;  // closing pi/2, Uzz(t_e/2), central pi
};
BlockHalves disentangle_halves(BellVariant v, const CouplingSpec& spec,
                               ReadoutChannel ch);

// frame rotation advancing every pulse phase by phi: diag phases on m=1 labels
UnitaryOp frame_rotation(double phi);

// disentangling block with every pulse phase advanced by phi_tppi
UnitaryOp disentangle_tppi(const CouplingSpec& spec, double phi_tppi,
                           BellVariant v, ReadoutChannel ch);
BlockHalves disentangle_tppi_halves(const CouplingSpec& spec, double phi_tppi,
                                    BellVariant v, ReadoutChannel ch);

enum class Control { a, b };

// CNOT built from the Ising gate dressed with target pi/2 pulses; sign
// flips the phase of both dressing pulses, omit_final_half_pulse drops the
// closing pulse (used when the next block starts with the matching pulse)
UnitaryOp cnot(Control control, const CouplingSpec& spec, int sign = +1,
               bool omit_final_half_pulse = false);
// two-CNOT state transfer a -> b, valid when NVb starts in m_s = 0; sign is
// the +-x alternation of the central NVb half pulse
UnitaryOp swap_from_cnots(const CouplingSpec& spec, int sign = +1);

// composite readout block closing the overlapping-window two-time sequence
UnitaryOp two_time_readout(BellVariant v, const CouplingSpec& spec);

}  // namespace covmag
