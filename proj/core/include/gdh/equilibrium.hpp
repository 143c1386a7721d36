#pragma once

#include <span>
#include <vector>

#include "gdh/grid.hpp"
#include "gdh/model.hpp"

namespace gdh {

/// R(s) = A sinh((p-1) sqrt(-w) s) / (alpha + A cosh((p-1) sqrt(-w) s))
/// with A = sqrt(alpha^2 - betaQ w): the odd increasing diffeomorphism of
/// the real line onto (-1, 1) whose inverse locates the profile shift.
/// Evaluated through exponentials for large arguments, so it never overflows.
double R_of(double s, const ModelParams& prm);

struct ShiftSolve {
    enum class Method { ClosedForm, Newton };
    double target = 0.0;   // -Z / (2 sqrt(-w)), in (-1, 1)
    double s = 0.0;        // R(s) = target
    Method method = Method::ClosedForm;
    double residual = 0.0; // |R(s) - target|
};

/// Solves R(s) = -Z/(2 sqrt(-w)). Closed form
///   u = artanh(r) + asinh(r alpha / (A sqrt(1-r^2))),  s = u/((p-1) sqrt(-w)),
/// with a Newton refinement fallback for |r| > shift_newton_cutover.
/// Throws RegimeViolation when |Z| >= 2 sqrt(-w).
ShiftSolve solve_shift(const ModelParams& prm);

/// Closed-form equilibrium phi_{w,Z}(x) = phi_{w,0}(|x| - s): even, positive,
/// exponentially decaying at rate kappa = sqrt(-w), with the derivative jump
/// phi'(0+) - phi'(0-) = -Z phi(0) built in through the shift s.
class EquilibriumProfile {
public:
    static EquilibriumProfile build(const ModelParams& prm);

    double operator()(double x) const { return value(x); }
    double value(double x) const;

    /// One-sided at the origin: +0.0 selects the x>0 limit, -0.0 the x<0
    /// limit (phi'(0+) = -(Z/2) phi(0)).
    double derivative(double x) const;

    /// Value of the unshifted profile at xi (phi_{w,0}).
    double unshifted(double xi) const;

    double peak() const { return peak_; }        // phi_{w,Z}(0)
    double shift() const { return solve_.s; }
    double kappa() const { return prm_.kappa(); }
    double amp() const { return amp_; }          // sqrt(alpha^2 - betaQ w)
    const ModelParams& params() const { return prm_; }
    const Regime& regime() const { return regime_; }
    const ShiftSolve& shiftSolve() const { return solve_; }

    /// Samples at the interior nodes of a grid.
    std::vector<double> samples(const Grid& grid) const;
    std::vector<double> derivativeSamples(const Grid& grid) const;

private:
    EquilibriumProfile(const ModelParams& prm, Regime regime, ShiftSolve solve);

    ModelParams prm_;
    Regime regime_;
    ShiftSolve solve_;
    double amp_ = 0.0;
    double peak_ = 0.0;
};

/// max over xs of |phi'' + w phi + f(phi)| with phi'' from the 5-point
/// central stencil of step hFd. All xs must stay at least 2 hFd away from
/// the origin kink.
double stationary_residual(const EquilibriumProfile& profile, std::span<const double> xs,
                           double hFd = 1e-3);

/// max over xs of |(phi')^2 + 2F(phi)| / (phi')^2, using the analytic
/// derivative. xs must avoid the profile's critical points.
double first_integral_residual(const EquilibriumProfile& profile, std::span<const double> xs);

/// |phi'(0+) - phi'(0-) + Z phi(0)| relative to |Z| phi(0) (to kappa phi(0)
/// when Z = 0).
double jump_residual(const EquilibriumProfile& profile);

/// b = 0 closed form [ (p+1)(-w)/(2a) sech^2((p-1)sqrt(-w)|x|/2
/// + artanh(Z/(2 sqrt(-w)))) ]^{1/(p-1)}; the b -> 0 limit of the generic
/// profile.
double b0_profile_at(double x, const ModelParams& prm);

struct ShootingResult {
    std::vector<double> xs;        // 0 = x_0 < ... <= L
    std::vector<double> phi;
    std::vector<double> phiPrime;
    double tailAmplitude = 0.0;    // matched coefficient of e^{-kappa x}
};

/// Independent verification of the closed form: integrates
/// phi'' = -w phi - f(phi) from far field toward 0 with an e^{-kappa x}
/// tail ansatz, bisecting the tail amplitude until the defect condition
/// phi'(0+) = -(Z/2) phi(0) holds to tol. The closed form enters only
/// through the [0.1, 10]x bracket around its tail coefficient.
/// Throws NoConvergence (with the bracket endpoints) if no sign change.
ShootingResult shooting_oracle(const ModelParams& prm, double L, double tol);

} // namespace gdh
