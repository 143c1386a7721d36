#pragma once

#include <functional>

namespace gdh {

/// Adaptive Simpson on [a, b] with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int maxDepth = 60);

/// Composite Simpson with n panels (n even).
double composite_simpson(const std::function<double(double)>& f, double a, double b, int n);

} // namespace gdh
