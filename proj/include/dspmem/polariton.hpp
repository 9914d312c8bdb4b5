#pragma once

#include <optional>

#include "dspmem/errors.hpp"
#include "dspmem/types.hpp"

namespace dspmem {

/// Eigenstate |+> of the {e, b, omega3} subsystem that adiabatically connects
/// to |b> as omega3 -> 0 (delta3 > 0). Amplitudes are real; c_b > 0 by
/// convention and c_e <= 0 for omega3 > 0. theta is derived from the
/// eigenvector as sin(theta) = c_b, cos(theta) = c_e.
struct DressedState {
  double c_b = 1.0;
  double c_e = 0.0;
  double theta = 0.0;        ///< rad
  double energy_plus = 0.0;  ///< J
  double omega3 = 0.0;       ///< rad/s
  double delta3 = 0.0;       ///< rad/s
};

DressedState dressed_state(double omega3, double delta3);

/// Inputs of the 6x6 polariton eigenproblem. g and g_prime are the collective
/// photon-atom couplings; the dressed couplings and omega_c' are derived.
struct PolaritonParams {
  complexd omega{};   ///< control Rabi rate on c-a (rad/s)
  complexd omega1{};  ///< control Rabi rate on c-f (rad/s)
  complexd omega2{};  ///< control Rabi rate on f-d (rad/s)
  double omega3 = 0.0;
  double delta1 = 0.0;  ///< rad/s
  double delta3 = 1.0;  ///< rad/s, must be > 0
  double g = 0.0;       ///< bare coupling, photon mode a (rad/s)
  double g_prime = 0.0; ///< bare coupling, photon mode b (rad/s)
  double omega_c = 0.0; ///< bare rotating-frame energy of |c> (rad/s)
  double ck = 0.0;      ///< photon-branch frequency offset (rad/s)

  void validate() const;
  DressedState dressed() const { return dressed_state(omega3, delta3); }
  double g_d() const;        ///< g sin(theta)
  double g_d_prime() const;  ///< g' cos(theta), signed
  double omega_c_prime() const;
};

/// One polariton eigenmode over the basis
/// (sigma_a+, sigma_c+, sigma_f+, sigma_d+, a^+, b^+).
struct PolaritonMode {
  Vector6cd phi = Vector6cd::Zero();
  double omega = 0.0;     ///< eigenfrequency (rad/s)
  double norm_a = 1.0;    ///< normalization factor A
  double darkness = 0.0;  ///< |phi1|^2 + |phi3|^2 + |phi4|^2
  bool degenerate = false;        ///< minimal-darkness pair within 1e-10
  std::optional<Vector6cd> second_phi;  ///< runner-up candidate when degenerate
  double second_omega = 0.0;
  bool ratio_warning = false;  ///< |omega1/delta1| > 0.1 (analytic mode only)
};

/// The 6x6 Hermitian matrix of the polariton eigenproblem.
Matrix6cd build_polariton_matrix(const PolaritonParams& p);

/// Solves the full eigenproblem and returns the mode with minimal darkness,
/// phase-fixed so phi(2) is real and positive. Ties (darkness difference
/// < 1e-10) are broken by smallest |omega| and flagged.
PolaritonMode find_dark_mode(const Matrix6cd& m);

/// Closed-form dark mode, valid for |omega1| << delta1 (hard limit 0.2,
/// warning above 0.1): A * (0, 1, -omega1/delta1, 0, -omega*/g_d*,
/// omega2* omega1 / (delta1 g_d'*)).
PolaritonMode analytic_dark_mode(const PolaritonParams& p);

/// Group velocity of the dark polariton; moduli are used for complex inputs.
/// Result is in [0, c).
double group_velocity(const PolaritonParams& p);

}  // namespace dspmem
