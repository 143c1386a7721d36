#pragma once

#include "gdh/model.hpp"

namespace gdh {

/// Uniform symmetric grid on [-L, L] with N intervals (N even) and
/// homogeneous Dirichlet ends. Operators and states live on the N-1
/// interior nodes; x = 0 is the interior node with index centerIndex().
struct Grid {
    double L = 20.0;
    int N = 4000;

    double h() const { return 2.0 * L / N; }
    int interior() const { return N - 1; }
    double node(int j) const { return -L + j * h(); }           // j = 0..N
    double interiorNode(int i) const { return node(i + 1); }    // i = 0..N-2
    int centerIndex() const { return N / 2 - 1; }

    static Grid make(double L, int N);

    /// L = max(20, 12/kappa, 24/Z for Z>0), N = 4000. The floor keeps the
    /// Dirichlet truncation error below the eigenvalue tolerances for every
    /// supported regime; both values are overridable everywhere.
    static Grid defaults(const ModelParams& prm);
};

} // namespace gdh
