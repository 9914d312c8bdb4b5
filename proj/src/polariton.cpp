#include "dspmem/polariton.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "dspmem/constants.hpp"

namespace dspmem {

namespace {

double mode_darkness(const Vector6cd& phi) {
  return std::norm(phi(0)) + std::norm(phi(2)) + std::norm(phi(3));
}

void fix_global_phase(Vector6cd& phi) {
  // Rotate so the spin-wave component phi(1) is real and positive; fall back
  // to the largest component if it vanishes.
  int ref = 1;
  if (std::abs(phi(1)) < 1e-14) {
    double best = 0.0;
    for (int i = 0; i < 6; ++i)
      if (std::abs(phi(i)) > best) {
        best = std::abs(phi(i));
        ref = i;
      }
  }
  const double mag = std::abs(phi(ref));
  if (mag > 0.0) phi *= std::conj(phi(ref)) / mag;
}

}  // namespace

DressedState dressed_state(double omega3, double delta3) {
  using constants::hbar;
  if (delta3 <= 0.0) throw ValidationError("dressed_state requires delta3 > 0");
  const double root = std::sqrt(delta3 * delta3 + 4.0 * omega3 * omega3);
  DressedState st;
  st.omega3 = omega3;
  st.delta3 = delta3;
  st.energy_plus = hbar * (-delta3 + root) / 2.0;
  // Unnormalized eigenvector of hbar [[-delta3, -omega3], [-omega3, 0]] in the
  // (e, b) basis at E+: c_e = -2 omega3 c_b / (delta3 + root).
  const double ce_over_cb = -2.0 * omega3 / (delta3 + root);
  const double cb = 1.0 / std::sqrt(1.0 + ce_over_cb * ce_over_cb);
  st.c_b = cb;
  st.c_e = ce_over_cb * cb;
  st.theta = std::atan2(st.c_b, st.c_e);
  return st;
}

void PolaritonParams::validate() const {
  if (delta3 <= 0.0) throw ValidationError("polariton params: delta3 must be > 0");
  if (g < 0.0 || g_prime < 0.0)
    throw ValidationError("polariton params: couplings g, g' must be >= 0");
}

double PolaritonParams::g_d() const { return g * dressed().c_b; }

double PolaritonParams::g_d_prime() const { return g_prime * dressed().c_e; }

double PolaritonParams::omega_c_prime() const {
  return omega_c - dressed().energy_plus / constants::hbar;
}

Matrix6cd build_polariton_matrix(const PolaritonParams& p) {
  p.validate();
  const double wc = p.omega_c_prime();
  const double gd = p.g_d();
  const double gdp = p.g_d_prime();
  Matrix6cd m = Matrix6cd::Zero();
  m(0, 0) = wc;
  m(1, 1) = wc;
  m(2, 2) = -p.delta1 + wc;
  m(3, 3) = wc;
  m(4, 4) = p.ck;
  m(5, 5) = p.ck;
  m(0, 1) = -std::conj(p.omega);
  m(1, 0) = -p.omega;
  m(1, 2) = -p.omega1;
  m(2, 1) = -std::conj(p.omega1);
  m(2, 3) = -p.omega2;
  m(3, 2) = -std::conj(p.omega2);
  m(0, 4) = -gd;
  m(4, 0) = -gd;
  m(3, 5) = -gdp;
  m(5, 3) = -gdp;
  return m;
}

PolaritonMode find_dark_mode(const Matrix6cd& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + m.cwiseAbs().maxCoeff()))
    throw ValidationError("find_dark_mode requires a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Matrix6cd> solver(m);
  std::array<double, 6> dark{};
  for (int i = 0; i < 6; ++i) dark[static_cast<size_t>(i)] = mode_darkness(solver.eigenvectors().col(i));

  std::array<int, 6> order{0, 1, 2, 3, 4, 5};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const double di = dark[static_cast<size_t>(i)], dj = dark[static_cast<size_t>(j)];
    if (std::abs(di - dj) >= 1e-10) return di < dj;
    return std::abs(solver.eigenvalues()(i)) < std::abs(solver.eigenvalues()(j));
  });

  PolaritonMode mode;
  const int best = order[0];
  const int runner = order[1];
  mode.phi = solver.eigenvectors().col(best);
  mode.phi.normalize();
  fix_global_phase(mode.phi);
  mode.omega = solver.eigenvalues()(best);
  mode.darkness = dark[static_cast<size_t>(best)];
  mode.norm_a = std::abs(mode.phi(1));
  if (std::abs(dark[static_cast<size_t>(best)] - dark[static_cast<size_t>(runner)]) < 1e-10) {
    mode.degenerate = true;
    Vector6cd second = solver.eigenvectors().col(runner);
    second.normalize();
    fix_global_phase(second);
    mode.second_phi = second;
    mode.second_omega = solver.eigenvalues()(runner);
  }
  return mode;
}

PolaritonMode analytic_dark_mode(const PolaritonParams& p) {
  p.validate();
  if (p.delta1 <= 0.0)
    throw ValidationError("analytic dark mode requires delta1 > 0");
  const double ratio = std::abs(p.omega1) / p.delta1;
  if (ratio >= 0.2)
    throw ValidationError("analytic dark mode invalid: |omega1/delta1| >= 0.2");

  const double gd = p.g_d();
  const double gdp = p.g_d_prime();
  const complexd r_f = -p.omega1 / p.delta1;
  complexd r_a{};
  if (std::abs(p.omega) > 0.0) {
    if (gd == 0.0) throw ValidationError("analytic dark mode: g_d = 0 with omega != 0");
    r_a = -std::conj(p.omega) / gd;
  }
  complexd r_b{};
  if (std::abs(p.omega2 * p.omega1) > 0.0) {
    if (gdp == 0.0) throw ValidationError("analytic dark mode: g_d' = 0 with omega1*omega2 != 0");
    r_b = std::conj(p.omega2) * p.omega1 / (p.delta1 * gdp);
  }

  PolaritonMode mode;
  mode.ratio_warning = ratio > 0.1;
  mode.norm_a = 1.0 / std::sqrt(1.0 + std::norm(r_f) + std::norm(r_a) + std::norm(r_b));
  mode.phi << 0.0, 1.0, r_f, 0.0, r_a, r_b;
  mode.phi *= mode.norm_a;
  mode.darkness = mode_darkness(mode.phi);
  // Rayleigh quotient as the eigenfrequency estimate of the approximate mode.
  const Matrix6cd m = build_polariton_matrix(p);
  mode.omega = (mode.phi.adjoint() * m * mode.phi)(0, 0).real();
  return mode;
}

double group_velocity(const PolaritonParams& p) {
  p.validate();
  const double gd = std::abs(p.g_d());
  const double gdp = std::abs(p.g_d_prime());

  double w_a = 0.0;  // photonic weight of mode a: |omega/g_d|^2
  if (std::abs(p.omega) > 0.0) {
    if (gd == 0.0) throw ValidationError("group_velocity: g_d = 0 with omega != 0");
    w_a = std::norm(p.omega) / (gd * gd);
  }
  double w_f = 0.0;  // |omega1/delta1|^2
  if (std::abs(p.omega1) > 0.0) {
    if (p.delta1 == 0.0) throw ValidationError("group_velocity: delta1 = 0 with omega1 != 0");
    w_f = std::norm(p.omega1) / (p.delta1 * p.delta1);
  }
  double w_b = 0.0;  // |omega2 omega1 / (delta1 g_d')|^2
  if (std::abs(p.omega2 * p.omega1) > 0.0) {
    if (gdp == 0.0)
      throw ValidationError("group_velocity: g_d' = 0 with omega1*omega2 != 0");
    w_b = std::norm(p.omega2) * w_f / (gdp * gdp);
  }
  return constants::c0 * (w_a + w_b) / (1.0 + w_f + w_a + w_b);
}

}  // namespace dspmem
