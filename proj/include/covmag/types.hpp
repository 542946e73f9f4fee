#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

// Two-qubit NV pair workspace on the {m_s=0, m_s=1} sublevels.
// Basis order everywhere: (|1,1>, |1,0>, |0,1>, |0,0>), first label = NVa.
namespace covmag {

using cx = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double pi = std::numbers::pi;

// centralized numeric tolerances
struct Tolerances {
  double structural = 1e-12;    // unitarity, hermiticity, trace, norm checks
  double accumulated = 1e-9;    // long compositions of many gates
  double eigen_floor = -1e-10;  // density-matrix eigenvalue floor
};
inline const Tolerances& tol() {
  static const Tolerances t{};
  return t;
}

namespace constants {
// NV electron gyromagnetic ratio (rad s^-1 T^-1)
inline constexpr double gamma_e = 2.0 * std::numbers::pi * 28.024e9;
// explicit unit token carried by the flat-band spectral density (1 Hz bandwidth)
inline constexpr double hz = 1.0;
}  // namespace constants

struct invalid_operator_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_state_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct miscalibrated_gate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct degenerate_contrast_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct integration_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_resonant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resonance_not_found_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct infeasible_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct degenerate_coherence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct fit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace covmag
