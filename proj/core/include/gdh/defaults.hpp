#pragma once

#include <algorithm>
#include <cmath>

// All numerical defaults and tolerances in one place; the CLI dumps these
// into every manifest so a run is reproducible from its artifacts alone.

namespace gdh::defaults {

inline constexpr double grid_L_floor = 20.0;   // half-width floor of the truncated domain
inline constexpr int    grid_N       = 4000;   // intervals (even)

inline constexpr double dt             = 1e-3;
inline constexpr double t_max          = 20.0;
inline constexpr double blow_threshold = 1e6;  // L2 cap marking blow-up
inline constexpr int    record_every   = 1;

inline constexpr double shift_residual_tol   = 1e-12; // |R(s) - target| after solve_shift
inline constexpr double shift_newton_cutover = 0.999; // |target| above which Newton refines

inline constexpr double eig_bisect_tol_rel   = 1e-10; // * scale, eigenvalue_k bisection
inline constexpr double eigvec_residual_rel  = 1e-8;  // * scale, inverse iteration exit
inline constexpr double iso_window_rel       = 1e-8;  // * scale, NoIsolation window
inline constexpr double tol_edge_rel         = 1e-9;  // * scale, negativity cut in morse_index
inline constexpr double pivot_floor          = 1e-300;

inline constexpr double h_fd       = 1e-3;  // 5-point stencil step for stationary_residual
inline constexpr double delta_beta = 0.05;  // central-difference step for beta_numeric
inline constexpr double delta_chi  = 1e-3;  // central-difference step for chi0

inline constexpr double tbound_quad_tol = 1e-8;  // adaptive quadrature tolerance
inline constexpr double tbound_tail_tol = 1e-10; // allowed truncated tail of the T integral
inline constexpr double slack_tol_factor = 1e-2; // * max|R'|, slack allowance

/// Eigenvalues are reported as discrete only below -w minus this margin.
inline double essential_margin(double h) {
    return std::max(10.0 * h * h, 1e-6);
}

/// Width of the band around 0 that classifies the discrete remnant of the
/// Z=0 kernel (the exact kernel exists only on the full line).
inline double zero_mode_band(double kappa, double p, double h, double L) {
    const double th = kappa * (p - 1.0);
    return std::max(10.0 * th * th * h * h, 100.0 * std::exp(-2.0 * kappa * L));
}

} // namespace gdh::defaults
