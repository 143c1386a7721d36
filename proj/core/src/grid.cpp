#include "gdh/grid.hpp"

#include <algorithm>
#include <stdexcept>

#include "gdh/defaults.hpp"

namespace gdh {

Grid Grid::make(double L, int N) {
    if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be > 0");
    if (N < 4 || N % 2 != 0) throw std::invalid_argument("Grid: N must be even and >= 4");
    return Grid{L, N};
}

Grid Grid::defaults(const ModelParams& prm) {
    double L = defaults::grid_L_floor;
    if (prm.w < 0.0) L = std::max(L, 12.0 / prm.kappa());
    if (prm.Z > 0.0) L = std::max(L, 24.0 / prm.Z); // resolve the A_Z bound state tail
    return Grid{L, defaults::grid_N};
}

} // namespace gdh
