#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gdh/operators.hpp"

namespace gdh {

struct InertiaResult {
    int count = 0;       // eigenvalues strictly below the shift
    int retries = 0;     // pivot-underflow retries taken
    double shiftUsed = 0;
};

/// Number of eigenvalues of op strictly below shift, by the signed-pivot
/// count of the Sturm / LDL^T recursion d_1 = a_1 - s,
/// d_j = (a_j - s) - b_{j-1}^2 / d_{j-1}. A pivot within 1e-300 of zero is
/// retried with the shift perturbed by 1e-12 |shift| + 1e-14 (alternating
/// sides, growing); persistent breakdown throws PivotBreakdown.
InertiaResult inertia_below_detailed(const TridiagonalOperator& op, double shift);
int inertia_below(const TridiagonalOperator& op, double shift);

/// k-th smallest eigenvalue (k >= 1) by bisection on inertia counts within
/// the Gershgorin bounds, to absolute tolerance eig_bisect_tol_rel * scale.
double eigenvalue_k(const TridiagonalOperator& op, int k);

/// Inverse iteration at the given (isolated) eigenvalue. The result is
/// normalized with the h-weighted norm (h sum v^2 = 1) and sign-fixed so
/// v(center) >= 0, or, when |v(center)| is negligible, so the forward
/// difference at the center is positive. Throws NoIsolation when a second
/// eigenvalue sits inside the isolation window around lambda.
std::vector<double> eigenvector(const TridiagonalOperator& op, double lambda);

struct SpectrumReport {
    int negCount = 0;                 // Morse index n(-L_Z)
    std::vector<double> eigenvalues;  // discrete eigenvalues, increasing
    std::vector<std::vector<double>> eigenvectors;
    double kernelGap = 0.0;           // min |eigenvalue| among reported ones
    double edge = 0.0;                // essential-spectrum edge, -w
    double zeroBand = 0.0;            // zero-mode classification band
    /// Index into eigenvalues of the discrete kernel remnant (Z = 0 only).
    std::optional<std::size_t> zeroModeIndex;
};

/// Assembles the profile and -L_Z on the grid and counts/extracts the
/// discrete spectrum. negCount counts eigenvalues below -tol_edge_rel*scale;
/// at Z = 0 eigenvalues inside the zero-mode band are classified as the
/// kernel remnant instead of negative (the exact kernel exists only on the
/// full line). Contract: negCount = 2 for Z < 0 and 1 for Z > 0; at Z = 0,
/// negCount = 1 plus one zero-band eigenvalue.
SpectrumReport morse_index(const ModelParams& prm, const Grid& grid);

} // namespace gdh
