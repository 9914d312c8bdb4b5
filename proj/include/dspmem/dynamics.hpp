#pragma once

#include <span>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "dspmem/errors.hpp"
#include "dspmem/types.hpp"

namespace dspmem {

struct StepControl {
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  double dt_min = 1e-15;    ///< s
  double dt_initial = 1e-9; ///< s
  double dt_max = 1e-8;     ///< s

  void validate() const;
};

/// Superoperator of -i [H, .] for H given in units of hbar (rad/s), acting on
/// column-stacked rho.
SuperOp hamiltonian_superop(const Matrix6cd& h);

/// Superoperator of sum_j (2 L_j rho L_j^+ - {L_j^+ L_j, rho}).
SuperOp dissipator_superop(std::span<const Matrix6cd> jump_ops);

/// Full Liouvillian acting on vec(rho); trace-preserving by construction.
SuperOp liouvillian(const Matrix6cd& h, std::span<const Matrix6cd> jump_ops);

Matrix6cd apply_superop(const SuperOp& op, const Matrix6cd& rho);

/// Hermitian part, (rho + rho^+) / 2.
Matrix6cd hermitize(const Matrix6cd& rho);

double min_eigenvalue(const Matrix6cd& rho);

struct EtdResult {
  Matrix6cd rho;
  double error;  ///< step-doubling estimate, max-abs entry difference
};

namespace detail {
EtdResult etd_step_impl(const Matrix6cd& rho, const SuperOp& mid, const SuperOp& quarter,
                        const SuperOp& three_quarter, double tau, double dt);
}

/// One exponential step rho' = exp(L(tau + dt/2) dt) rho with the Liouvillian
/// frozen at the step midpoint. The error estimate compares against two half
/// steps (frozen at tau + dt/4 and tau + 3dt/4). rho' is re-hermitized and
/// trace-renormalized when |tr - 1| > 1e-12.
template <typename HamFn>
EtdResult etd_step(const Matrix6cd& rho, HamFn&& h_of, const SuperOp& dissipator,
                   double tau, double dt) {
  if (dt <= 0.0) throw ValidationError("etd_step requires dt > 0");
  const SuperOp mid = hamiltonian_superop(h_of(tau + 0.5 * dt)) + dissipator;
  const SuperOp quarter = hamiltonian_superop(h_of(tau + 0.25 * dt)) + dissipator;
  const SuperOp three_quarter = hamiltonian_superop(h_of(tau + 0.75 * dt)) + dissipator;
  return detail::etd_step_impl(rho, mid, quarter, three_quarter, tau, dt);
}

template <typename HamFn>
EtdResult etd_step(const Matrix6cd& rho, HamFn&& h_of, std::span<const Matrix6cd> jump_ops,
                   double tau, double dt) {
  return etd_step(rho, std::forward<HamFn>(h_of), dissipator_superop(jump_ops), tau, dt);
}

/// Classical fourth-order one-step method on the same right-hand side,
/// evaluated directly in matrix form. Used as the validation oracle.
template <typename HamFn>
Matrix6cd rk4_reference(const Matrix6cd& rho, HamFn&& h_of,
                        std::span<const Matrix6cd> jump_ops, double tau, double dt) {
  auto rhs = [&](double t, const Matrix6cd& r) {
    const Matrix6cd h = h_of(t);
    Matrix6cd out = complexd(0.0, -1.0) * (h * r - r * h);
    for (const Matrix6cd& l : jump_ops) {
      const Matrix6cd ldl = l.adjoint() * l;
      out += 2.0 * (l * r * l.adjoint()) - ldl * r - r * ldl;
    }
    return out;
  };
  const Matrix6cd k1 = rhs(tau, rho);
  const Matrix6cd k2 = rhs(tau + 0.5 * dt, rho + 0.5 * dt * k1);
  const Matrix6cd k3 = rhs(tau + 0.5 * dt, rho + 0.5 * dt * k2);
  const Matrix6cd k4 = rhs(tau + dt, rho + dt * k3);
  Matrix6cd out = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!out.allFinite())
    throw NumericalError("rk4_reference produced non-finite entries", tau, dt);
  return out;
}

struct StepDecision {
  bool accept = false;
  double dt_next = 0.0;
};

/// Proportional controller: accept when error <= abs_tol + rel_tol * rho_norm;
/// dt_next = dt * clamp(0.9 (tol/error)^(1/3), 0.2, 5), clamped to
/// [dt_min, dt_max]. Throws NumericalError if dt would fall below dt_min.
StepDecision adapt_step(double error, double dt, double rho_norm, const StepControl& ctrl);

}  // namespace dspmem
