#pragma once

#include <span>
#include <vector>

#include "gdh/spectral.hpp"

namespace gdh {

/// Second eigenvalue Pi_2(Z) and eigenfunction Omega_2(Z) of -L_Z tracked
/// across Z = 0, with sign-aligned continuation. Pi_2 crosses zero at Z = 0
/// with slope beta > 0, so the second negative eigenvalue exists exactly
/// for Z < 0.
struct PerturbationCurve {
    std::vector<double> Zs;
    std::vector<double> pi2;
    std::vector<std::vector<double>> omega2; // sign-aligned to predecessor
    std::vector<int> negCounts;
    std::vector<bool> secondDiscrete; // false where Pi_2 left the discrete window
    Grid grid;
};

/// Builds profile and -L_Z per Z (Z of params0 is ignored) and extracts the
/// second-smallest eigenvalue/eigenvector with continuation.
PerturbationCurve pi2_scan(const ModelParams& params0, std::span<const double> Zs,
                           const Grid& grid);

/// Closed-form crossing slope beta = phi(0) (-phi''(0)) / ||phi'||^2 at
/// Z = 0, with phi''(0) = -w phi(0) - f(phi(0)) from the ODE and ||phi'||^2
/// by Richardson-refined composite Simpson on [-L, L] (refined until the
/// value moves < 1e-8). Positive in every valid regime.
double beta_closed_form(const ModelParams& params0, const Grid& grid);

/// Central difference (Pi_2(delta) - Pi_2(-delta)) / (2 delta) from a curve
/// containing the pair +-delta closest to zero. Matches beta_closed_form
/// within 2% at delta = 0.05 on converged grids.
double beta_numeric(const PerturbationCurve& curve);

/// d/dZ phi_{w,Z} |_{Z=0} at the interior nodes, by central differences of
/// profiles at Z = +-deltaChi. Even in x.
std::vector<double> chi0(const ModelParams& params0, const Grid& grid, double deltaChi = 1e-3);

struct TalReport {
    double discrepancySup = 0.0;  // interior sup |LHS - RHS| / sup|RHS|
    double discrepancyAbs = 0.0;
    double rhsSup = 0.0;
};

/// Applies the assembled -L_0 to node samples of (-w phi - f(phi)) and
/// compares against node values of f''(phi)(phi')^2. The reported
/// discrepancy is normalized by sup|RHS|; it converges at O(h^2).
TalReport check_identity_tal(const ModelParams& params0, const Grid& grid);

struct DeltaIdentityReport {
    std::vector<double> lhs;           // h <apply(-L_0, chi0), psi>
    std::vector<double> rhs;           // phi(0) psi(0)
    double worstDiscrepancy = 0.0;
};

/// <-L_0 chi0, psi> = phi_{w,0}(0) psi(0) for each test vector psi
/// (node samples). Discrepancy bounded by max(5e-3, C(h + deltaChi^2))
/// times |phi(0) psi(0)| on default grids.
DeltaIdentityReport check_delemaduro(const ModelParams& params0, const Grid& grid,
                                     std::span<const std::vector<double>> testVectors,
                                     double deltaChi = 1e-3);

} // namespace gdh
