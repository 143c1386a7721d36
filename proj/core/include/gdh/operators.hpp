#pragma once

#include <span>
#include <vector>

#include "gdh/equilibrium.hpp"
#include "gdh/grid.hpp"

namespace gdh {

/// Symmetric tridiagonal matrix on the interior nodes of a grid, Dirichlet
/// ends eliminated. The delta interaction is folded into the center diagonal
/// as -Z/h (the finite-volume reading of the jump condition
/// u'(0+) - u'(0-) = -Z u(0); second-order accurate and keeps the matrix
/// symmetric).
///
///   AZ:       diag_j = 2/h^2 - (Z/h)[j=c],               off = -1/h^2
///   MinusLZ:  diag_j = 2/h^2 - (Z/h)[j=c] - w - V(x_j),  off = -1/h^2
/// with V = a p phi^{p-1} + b(2p-1) phi^{2p-2}.
struct TridiagonalOperator {
    enum class Kind { AZ, MinusLZ };

    Grid grid;
    Kind kind = Kind::AZ;
    std::vector<double> diag; // grid.interior() entries
    std::vector<double> off;  // grid.interior()-1 entries

    /// Tolerance reference: max |diag|.
    double scale() const;
};

TridiagonalOperator assemble_AZ(const Grid& grid, double Z);

/// -L_Z with the potential sampled from the closed-form profile. Discrete
/// eigenvalues of the continuum operator live below the essential edge -w;
/// anything above -w - essential_margin(h) is truncated continuum.
TridiagonalOperator assemble_minusLZ(const ModelParams& prm, const EquilibriumProfile& profile,
                                     const Grid& grid);

void apply(const TridiagonalOperator& op, std::span<const double> v, std::span<double> out);
std::vector<double> apply(const TridiagonalOperator& op, std::span<const double> v);

} // namespace gdh
