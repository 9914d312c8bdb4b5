#pragma once

namespace dspmem::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double c0 = 299792458.0;         // m / s
inline constexpr double eps0 = 8.8541878128e-12;  // F / m
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace dspmem::constants
