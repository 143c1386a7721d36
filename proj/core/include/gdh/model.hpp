#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "gdh/errors.hpp"

namespace gdh {

/// Parameters of  u_t - u_xx = Z d(x) u + w u + a u^p + b u^{2p-1}.
///
/// The nonlinearity is extended oddly through sigma_q(u) = |u|^{q-1} u so the
/// time stepper stays total for sign-changing iterates; for u > 0 all three
/// member functions agree with the plain powers.
struct ModelParams {
    double a = 0.0;
    double b = 0.0;
    double p = 2.0; // exponent, > 1
    double w = -1.0;
    double Z = 0.0;

    double alpha() const { return a / (p + 1.0); }
    double betaQ() const { return b / p; }
    double kappa() const { return std::sqrt(-w); } // tail decay rate

    /// f(u) = a sigma_p(u) + b sigma_{2p-1}(u)
    double f(double u) const;
    /// f'(u) = a p |u|^{p-1} + b (2p-1) |u|^{2p-2}  (even)
    double f1(double u) const;
    /// f''(u); for p < 2 the second derivative is singular at u = 0 and a
    /// quiet NaN is returned there.
    double f2(double u) const;

    /// F(s) = w s^2/2 + a s^{p+1}/(p+1) + b s^{2p}/(2p), for s >= 0.
    /// 2F(phi) is the first-integral combination w phi^2 + 2 alpha phi^{p+1}
    /// + betaQ phi^{2p}.
    double potentialF(double s) const;
};

enum class RegimeTag { PositiveB, NegativeB, ZeroB };

const char* to_string(RegimeTag tag);

/// Admissible interval for -w at the given Z. The upper bound is
/// -p a^2 / ((p+1)^2 b) in the NegativeB regime and absent otherwise.
struct Regime {
    RegimeTag tag;
    double minusWLower = 0.0;
    std::optional<double> minusWUpper;
};

/// Classifies the parameters, or throws RegimeViolation naming the failed
/// inequality (e.g. "-w >= 5").
Regime validate(const ModelParams& prm);

/// Upper bound -p a^2/((p+1)^2 b) of -w for b < 0, evaluated divide-first.
double negative_b_upper_bound(const ModelParams& prm);

/// Huxley reduction: a = beta1 (1+gamma1), b = -beta1, w = -gamma1 beta1,
/// Z = 0. Requires beta1 > 0 and gamma1 in (0,1).
ModelParams from_huxley(double beta1, double gamma1, double p = 2.0);

} // namespace gdh
